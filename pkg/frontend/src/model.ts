import { Classification, Layout, QuiverJson } from './types.js';
import { validateQuiver } from './validate.js';

export interface ViewModel {
  quiver: QuiverJson;
  layout: Layout;
  classification: Classification | null;
  /** full mutation history; cursor points at the current entry */
  history: QuiverJson[];
  cursor: number;
  notice: string | null;
}

export function initViewModel(quiver: QuiverJson, layout: Layout): ViewModel {
  const problem = validateQuiver(quiver);
  if (problem) throw new Error(`invalid quiver: ${problem}`);
  return {
    quiver,
    layout,
    classification: null,
    history: [quiver],
    cursor: 0,
    notice: null,
  };
}

/** Append a server-returned quiver, truncating any redo branch. */
export function applyMutation(
  vm: ViewModel,
  quiver: QuiverJson,
  classification: Classification,
): ViewModel {
  const problem = validateQuiver(quiver);
  if (problem) return withNotice(vm, `server sent an invalid quiver: ${problem}`);
  const history = vm.history.slice(0, vm.cursor + 1).concat([quiver]);
  return {
    ...vm,
    quiver,
    classification,
    history,
    cursor: history.length - 1,
    notice: null,
  };
}

export function applyUndo(vm: ViewModel, quiver: QuiverJson, classification: Classification): ViewModel {
  if (vm.cursor === 0) return withNotice(vm, 'nothing to undo');
  return {
    ...vm,
    quiver,
    classification,
    cursor: vm.cursor - 1,
    notice: null,
  };
}

export function canUndo(vm: ViewModel): boolean {
  return vm.cursor > 0;
}

export function withNotice(vm: ViewModel, notice: string): ViewModel {
  return { ...vm, notice };
}

export function badgeText(vm: ViewModel): string {
  if (!vm.classification) return '…';
  if (vm.classification.verdict === 'NotMember') return 'NotMember';
  return vm.classification.verdict;
}

export function historyLength(vm: ViewModel): number {
  return vm.history.length - 1; // mutations applied, not states
}
