import type { Diagnostic, VerifyReport } from "./types.js";

/** Editor state for one selected component: the buffer, its revision
 * counter, and the last verification outcome. Markers always derive from
 * the last report; once the buffer moves past the verified revision the
 * report is stale and rendered as such. */
export class EditorSession {
  componentId: string | null = null;
  editable = false;
  buffer = "";
  revision = 0;
  lastReport: VerifyReport | null = null;
  diagnostics: Diagnostic[] = [];
  reportRevision = -1;
  selectedVcId: string | null = null;

  open(componentId: string, text: string, editable: boolean): void {
    this.componentId = componentId;
    this.editable = editable;
    this.buffer = text;
    this.revision = 0;
    this.lastReport = null;
    this.diagnostics = [];
    this.reportRevision = -1;
    this.selectedVcId = null;
  }

  edit(text: string): void {
    if (text === this.buffer) return;
    this.buffer = text;
    this.revision += 1;
  }

  applyReport(report: VerifyReport, atRevision: number): void {
    this.lastReport = report;
    this.diagnostics = [];
    this.reportRevision = atRevision;
    this.selectedVcId = null;
  }

  applyDiagnostics(diagnostics: Diagnostic[]): void {
    this.lastReport = null;
    this.diagnostics = diagnostics;
    this.reportRevision = -1;
    this.selectedVcId = null;
  }

  get stale(): boolean {
    return this.lastReport !== null && this.reportRevision !== this.revision;
  }
}
