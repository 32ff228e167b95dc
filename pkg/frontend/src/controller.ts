import { Api, ApiError } from './api.js';
import { forceLayout } from './layout.js';
import {
  ViewModel,
  applyMutation,
  applyUndo,
  initViewModel,
  withNotice,
} from './model.js';
import { QuiverJson } from './types.js';

/** Session-backed explorer state machine.  All server traffic is
 * serialized: clicks arriving while a request is in flight are queued and
 * replayed in order, so the view model never races the session. */
export class ExplorerController {
  private sessionId: string | null = null;
  private vm: ViewModel | null = null;
  private queue: Promise<void> = Promise.resolve();
  private listeners: ((vm: ViewModel) => void)[] = [];

  constructor(private readonly api: Api) {}

  get state(): ViewModel {
    if (!this.vm) throw new Error('controller not loaded');
    return this.vm;
  }

  onChange(listener: (vm: ViewModel) => void): void {
    this.listeners.push(listener);
  }

  private publish(vm: ViewModel): void {
    this.vm = vm;
    for (const listener of this.listeners) listener(vm);
  }

  async load(quiver: QuiverJson): Promise<ViewModel> {
    const session = await this.api.createSession(quiver);
    this.sessionId = session.id;
    const vm = initViewModel(session.quiver, forceLayout(session.quiver));
    const classification = await this.api.classify(session.quiver);
    this.publish({ ...vm, classification });
    return this.state;
  }

  async loadStandard(n: number, m: number): Promise<ViewModel> {
    return this.load(await this.api.standardD(n, m));
  }

  /** Queue a vertex click; resolves once this click has been applied. */
  clickVertex(vertex: number): Promise<ViewModel> {
    return this.enqueue(async () => {
      if (!this.sessionId || !this.vm) throw new Error('controller not loaded');
      try {
        const result = await this.api.mutate(this.sessionId, vertex);
        const next = applyMutation(this.vm, result.quiver, result.classification);
        // arrows changed, vertices stay put
        this.publish({ ...next, layout: forceLayout(result.quiver, this.vm.layout) });
      } catch (error) {
        this.publish(withNotice(this.vm, describe(error)));
      }
      return this.state;
    });
  }

  undo(): Promise<ViewModel> {
    return this.enqueue(async () => {
      if (!this.sessionId || !this.vm) throw new Error('controller not loaded');
      try {
        const result = await this.api.undo(this.sessionId);
        this.publish(applyUndo(this.vm, result.quiver, result.classification));
      } catch (error) {
        this.publish(withNotice(this.vm, describe(error)));
      }
      return this.state;
    });
  }

  private enqueue(task: () => Promise<ViewModel>): Promise<ViewModel> {
    const result = this.queue.then(task);
    this.queue = result.then(
      () => undefined,
      () => undefined,
    );
    return result;
  }
}

function describe(error: unknown): string {
  if (error instanceof ApiError) return error.message;
  return String(error);
}
