import {
  Classification,
  MutateResponse,
  OrbitMember,
  QuiverJson,
  SessionResponse,
} from './types.js';

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    detail: string,
  ) {
    super(`${code}: ${detail}`);
  }
}

async function unwrap<T>(response: Response): Promise<T> {
  if (response.ok) return (await response.json()) as T;
  let code = 'Error';
  let detail = response.statusText;
  try {
    const body = await response.json();
    code = body.error ?? code;
    detail = body.detail ?? detail;
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(response.status, code, detail);
}

/** Typed client for the quiver service; one instance per base URL. */
export class Api {
  constructor(
    readonly baseUrl: string,
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.fetchFn(`${this.baseUrl}${path}`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(body),
    }).then((r) => unwrap<T>(r));
  }

  standardD(n: number, m: number): Promise<QuiverJson> {
    return this.fetchFn(`${this.baseUrl}/standard/d/${n}/${m}`).then((r) =>
      unwrap<QuiverJson>(r),
    );
  }

  classify(quiver: QuiverJson): Promise<Classification> {
    return this.post('/quiver/classify', { quiver });
  }

  createSession(quiver: QuiverJson): Promise<SessionResponse> {
    return this.post('/session', { quiver });
  }

  mutate(sessionId: string, vertex: number): Promise<MutateResponse> {
    return this.post(`/session/${sessionId}/mutate`, { vertex });
  }

  undo(sessionId: string): Promise<MutateResponse> {
    return this.post(`/session/${sessionId}/undo`, {});
  }

  async enumerate(quiver: QuiverJson, cap: number): Promise<OrbitMember[]> {
    const response = await this.fetchFn(`${this.baseUrl}/orbit/enumerate`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ quiver, cap }),
    });
    if (!response.ok) return unwrap<OrbitMember[]>(response);
    const text = await response.text();
    return text
      .split('\n')
      .filter((line) => line.trim().length > 0)
      .map((line) => JSON.parse(line) as OrbitMember);
  }
}
