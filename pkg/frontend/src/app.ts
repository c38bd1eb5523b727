import { WorkbenchApi } from "./api.js";
import { markerTarget } from "./markers.js";
import { EditorSession } from "./session.js";
import {
  buildSkeleton, renderEditor, renderPanel, renderTree, showBanner,
  ViewHandlers,
} from "./view.js";
import type { ComponentNode } from "./types.js";

/** Wires the session, the API client, and the DOM together. Handlers are
 * async; `settled()` lets a scripted test await the in-flight work. At most
 * one verify request is in flight - re-submitting supersedes the old one. */
export class Ide implements ViewHandlers {
  readonly session = new EditorSession();
  private tree: ComponentNode[] = [];
  private pending: Promise<unknown> = Promise.resolve();
  private verifyToken = 0;

  constructor(private readonly root: HTMLElement,
              private readonly api: WorkbenchApi) {
    buildSkeleton(root);
    const buffer = root.querySelector<HTMLTextAreaElement>(".buffer")!;
    buffer.addEventListener("input", () => this.onEdit(buffer.value));
    root.querySelector<HTMLButtonElement>(".verify-btn")!
      .addEventListener("click", () => this.onVerify());
  }

  private track<T>(work: Promise<T>): Promise<T> {
    this.pending = this.pending.then(() => work, () => work);
    return work;
  }

  /** Resolves once every handler started so far has finished. */
  async settled(): Promise<void> {
    let last;
    do {
      last = this.pending;
      await last.catch(() => undefined);
    } while (last !== this.pending);
  }

  async start(): Promise<void> {
    await this.track(this.refreshTree());
  }

  private async refreshTree(): Promise<void> {
    try {
      this.tree = await this.api.components();
      showBanner(this.root, null);
    } catch (error) {
      showBanner(this.root, `cannot reach the workspace service: ${error}`);
      this.tree = [];
    }
    this.redraw();
  }

  onSelect(id: string): void {
    this.track(this.openComponent(id));
  }

  private async openComponent(id: string): Promise<void> {
    try {
      const text = await this.api.source(id);
      const editable = this.findNode(id)?.editable ?? false;
      this.session.open(id, text, editable);
      showBanner(this.root, null);
    } catch (error) {
      showBanner(this.root, `cannot load ${id}: ${error}`);
    }
    this.redraw();
  }

  private findNode(id: string, nodes?: ComponentNode[]): ComponentNode | null {
    for (const node of nodes ?? this.tree) {
      if (node.id === id) return node;
      const hit = this.findNode(id, node.children);
      if (hit) return hit;
    }
    return null;
  }

  onEdit(text: string): void {
    this.session.edit(text);
    this.redraw();
  }

  onVerify(): void {
    this.track(this.runVerify());
  }

  private async runVerify(): Promise<void> {
    const id = this.session.componentId;
    if (id === null) return;
    const token = ++this.verifyToken;
    const revision = this.session.revision;
    try {
      if (this.session.editable) {
        await this.api.saveSource(id, this.session.buffer);
      }
      const outcome = await this.api.verify(id);
      if (token !== this.verifyToken) return;   // superseded by a re-submit
      if (outcome.ok) {
        this.session.applyReport(outcome.report, revision);
      } else {
        this.session.applyDiagnostics(outcome.diagnostics);
      }
      showBanner(this.root, null);
    } catch (error) {
      if (token !== this.verifyToken) return;
      showBanner(this.root, `verification failed: ${error}`);
    }
    this.redraw();
  }

  onMarkerClick(line: number): void {
    const report = this.session.lastReport;
    if (!report) return;
    const target = markerTarget(report, line);
    if (target) {
      this.session.selectedVcId = target.id;
      this.redraw();
    }
  }

  onVcClick(id: string): void {
    this.session.selectedVcId = id;
    this.redraw();
  }

  private redraw(): void {
    renderTree(this.root, this.tree, this.session.componentId, this);
    renderEditor(this.root, this.session, this);
    renderPanel(this.root, this.session, this);
  }
}

export function createIde(root: HTMLElement, api: WorkbenchApi): Ide {
  return new Ide(root, api);
}

declare global {
  interface Window {
    vcbenchIde?: Ide;
  }
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  const ide = createIde(document.getElementById("app")!, new WorkbenchApi(""));
  window.vcbenchIde = ide;
  void ide.start();
}
