import type { ComponentNode, VerifyOutcome } from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

/** Thin typed client for the workspace service. The fetch implementation is
 * injectable so tests can add cookie handling outside a real browser. */
export class WorkbenchApi {
  constructor(
    private readonly base: string = "",
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private url(path: string, id?: string): string {
    const suffix = id === undefined ? "" : `?id=${encodeURIComponent(id)}`;
    return `${this.base}/api/v1${path}${suffix}`;
  }

  async components(): Promise<ComponentNode[]> {
    const response = await this.fetchImpl(this.url("/components"));
    if (!response.ok) throw new Error(`components: HTTP ${response.status}`);
    const payload = await response.json();
    return payload.components as ComponentNode[];
  }

  async source(id: string): Promise<string> {
    const response = await this.fetchImpl(this.url("/source", id));
    if (!response.ok) throw new Error(`source ${id}: HTTP ${response.status}`);
    return response.text();
  }

  async saveSource(id: string, text: string): Promise<void> {
    const response = await this.fetchImpl(this.url("/source", id), {
      method: "PUT",
      body: text,
      headers: { "content-type": "text/plain; charset=utf-8" },
    });
    if (!response.ok) throw new Error(`save ${id}: HTTP ${response.status}`);
  }

  async verify(id: string): Promise<VerifyOutcome> {
    const response = await this.fetchImpl(this.url("/verify", id), {
      method: "POST",
    });
    if (response.status === 422) {
      const payload = await response.json();
      return { ok: false, diagnostics: payload.diagnostics };
    }
    if (!response.ok) throw new Error(`verify ${id}: HTTP ${response.status}`);
    return { ok: true, report: await response.json() };
  }
}
