import { lineMarkers } from "./markers.js";
import type { EditorSession } from "./session.js";
import type { ComponentNode, Diagnostic, VcResult } from "./types.js";

// Rendering is plain DOM so the whole IDE runs unbundled and tests can
// drive it under jsdom. Layout: component tree left, editor center,
// VC detail panel right.

export interface ViewHandlers {
  onSelect(id: string): void;
  onVerify(): void;
  onEdit(text: string): void;
  onMarkerClick(line: number): void;
  onVcClick(id: string): void;
}

export function buildSkeleton(root: HTMLElement): void {
  root.innerHTML = `
    <div class="ide">
      <aside class="tree" aria-label="components"></aside>
      <main class="editor-pane">
        <div class="toolbar">
          <span class="component-name">no component selected</span>
          <button class="verify-btn" disabled>Verify</button>
          <span class="status-line"></span>
        </div>
        <div class="banner" hidden></div>
        <div class="editor">
          <div class="gutter"></div>
          <textarea class="buffer" spellcheck="false" disabled></textarea>
        </div>
        <ul class="diagnostics"></ul>
      </main>
      <aside class="panel"><p class="placeholder">Select a VC to inspect its
        goal and givens.</p></aside>
    </div>`;
}

export function renderTree(root: HTMLElement, nodes: ComponentNode[],
                           selected: string | null,
                           handlers: ViewHandlers): void {
  const tree = root.querySelector(".tree")!;
  tree.innerHTML = "";
  if (nodes.length === 0) {
    const empty = document.createElement("p");
    empty.className = "placeholder";
    empty.textContent = "no components in this workspace";
    tree.appendChild(empty);
    return;
  }
  tree.appendChild(renderNodes(nodes, selected, handlers));
}

function renderNodes(nodes: ComponentNode[], selected: string | null,
                     handlers: ViewHandlers): HTMLUListElement {
  const list = document.createElement("ul");
  for (const node of nodes) {
    const item = document.createElement("li");
    const button = document.createElement("button");
    button.className = `tree-node kind-${node.kind}` +
      (node.id === selected ? " selected" : "");
    button.dataset.id = node.id;
    button.textContent = node.name;
    if (!node.editable) {
      const lock = document.createElement("span");
      lock.className = "lock-badge";
      lock.title = "built-in, read-only";
      lock.textContent = " [ro]";
      button.appendChild(lock);
    }
    button.addEventListener("click", () => handlers.onSelect(node.id));
    item.appendChild(button);
    if (node.children.length > 0) {
      item.appendChild(renderNodes(node.children, selected, handlers));
    }
    list.appendChild(item);
  }
  return list;
}

export function renderEditor(root: HTMLElement, session: EditorSession,
                             handlers: ViewHandlers): void {
  const name = root.querySelector<HTMLElement>(".component-name")!;
  const buffer = root.querySelector<HTMLTextAreaElement>(".buffer")!;
  const verify = root.querySelector<HTMLButtonElement>(".verify-btn")!;
  name.textContent = session.componentId ?? "no component selected";
  if (buffer.value !== session.buffer) {
    buffer.value = session.buffer;
  }
  buffer.disabled = session.componentId === null;
  buffer.readOnly = !session.editable;
  verify.disabled = session.componentId === null;
  renderGutter(root, session, handlers);
  renderDiagnostics(root, session.diagnostics);
  renderStatusLine(root, session);
}

function renderGutter(root: HTMLElement, session: EditorSession,
                      handlers: ViewHandlers): void {
  const gutter = root.querySelector<HTMLElement>(".gutter")!;
  gutter.innerHTML = "";
  gutter.classList.toggle("stale", session.stale);
  const lines = session.buffer === "" ? 0 : session.buffer.split("\n").length;
  const markers = new Map(
    (session.lastReport ? lineMarkers(session.lastReport) : [])
      .map((m) => [m.line, m]));
  for (let line = 1; line <= lines; line += 1) {
    const row = document.createElement("div");
    row.className = "gutter-line";
    row.dataset.line = String(line);
    const number = document.createElement("span");
    number.className = "lineno";
    number.textContent = String(line);
    row.appendChild(number);
    const marker = markers.get(line);
    if (marker) {
      const button = document.createElement("button");
      button.className = `marker ${marker.state === "proved" ? "proved" : "open"}` +
        (session.stale ? " stale" : "");
      button.dataset.line = String(line);
      button.title = "VC " + marker.vcIds.join(", ");
      button.textContent = marker.state === "proved" ? "✓" : "!";
      button.addEventListener("click", () => handlers.onMarkerClick(line));
      row.appendChild(button);
    }
    gutter.appendChild(row);
  }
}

function renderDiagnostics(root: HTMLElement, diagnostics: Diagnostic[]): void {
  const list = root.querySelector<HTMLElement>(".diagnostics")!;
  list.innerHTML = "";
  for (const diag of diagnostics) {
    const item = document.createElement("li");
    item.className = `diagnostic ${diag.severity}`;
    item.textContent = `${diag.line}:${diag.column}: ${diag.message}`;
    list.appendChild(item);
  }
}

function renderStatusLine(root: HTMLElement, session: EditorSession): void {
  const status = root.querySelector<HTMLElement>(".status-line")!;
  status.classList.toggle("stale", session.stale);
  if (session.diagnostics.length > 0) {
    status.textContent = "does not parse or check";
    return;
  }
  if (!session.lastReport) {
    status.textContent = "";
    return;
  }
  const totals = session.lastReport.totals;
  const verdict = totals.unprovable + totals.timeout === 0
    ? "verified" : `${totals.unprovable + totals.timeout} VCs open`;
  status.textContent = `${verdict} (${totals.proved}/${session.lastReport.vcs.length}` +
    ` proved)` + (session.stale ? " - edited since, re-run Verify" : "");
}

export function renderPanel(root: HTMLElement, session: EditorSession,
                            handlers: ViewHandlers): void {
  const panel = root.querySelector<HTMLElement>(".panel")!;
  panel.innerHTML = "";
  const report = session.lastReport;
  if (!report) {
    const empty = document.createElement("p");
    empty.className = "placeholder";
    empty.textContent = "Select a VC to inspect its goal and givens.";
    panel.appendChild(empty);
    return;
  }
  const list = document.createElement("ul");
  list.className = "vc-list";
  for (const vc of report.vcs) {
    const item = document.createElement("li");
    const button = document.createElement("button");
    button.className = `vc-button ${vc.status}` +
      (vc.id === session.selectedVcId ? " selected" : "");
    button.dataset.vc = vc.id;
    button.textContent = `${vc.id} (line ${vc.line}) ${vc.status}`;
    button.addEventListener("click", () => handlers.onVcClick(vc.id));
    item.appendChild(button);
    list.appendChild(item);
  }
  panel.appendChild(list);
  const selected = report.vcs.find((vc) => vc.id === session.selectedVcId);
  if (selected) {
    panel.appendChild(renderDetail(selected));
  }
}

function renderDetail(vc: VcResult): HTMLElement {
  const detail = document.createElement("section");
  detail.className = "vc-detail";
  const heading = document.createElement("h2");
  heading.textContent = `VC ${vc.id}`;
  const badge = document.createElement("span");
  badge.className = `badge ${vc.status}`;
  badge.textContent = vc.status;
  heading.appendChild(badge);
  detail.appendChild(heading);

  const description = document.createElement("p");
  description.className = "vc-description";
  description.textContent = `${vc.description} (line ${vc.line})`;
  detail.appendChild(description);

  const goalLabel = document.createElement("h3");
  goalLabel.textContent = "Goal";
  detail.appendChild(goalLabel);
  const goal = document.createElement("pre");
  goal.className = "goal";
  goal.textContent = vc.goal;
  detail.appendChild(goal);

  const givensLabel = document.createElement("h3");
  givensLabel.textContent = "Givens";
  detail.appendChild(givensLabel);
  const givens = document.createElement("ol");
  givens.className = "givens";
  for (const given of vc.givens) {
    const item = document.createElement("li");
    item.className = "given";
    item.textContent = given;
    givens.appendChild(item);
  }
  detail.appendChild(givens);

  if (vc.status === "proved" && vc.trace && vc.trace.length > 0) {
    const traceLabel = document.createElement("h3");
    traceLabel.textContent = "Derivation";
    detail.appendChild(traceLabel);
    const trace = document.createElement("ol");
    trace.className = "trace";
    for (const step of vc.trace) {
      const item = document.createElement("li");
      item.textContent = step.detail
        ? `${step.rule} [${step.detail}]: ${step.fact}`
        : `${step.rule}: ${step.fact}`;
      trace.appendChild(item);
    }
    detail.appendChild(trace);
  }
  return detail;
}

export function showBanner(root: HTMLElement, message: string | null): void {
  const banner = root.querySelector<HTMLElement>(".banner")!;
  if (message === null) {
    banner.hidden = true;
    banner.textContent = "";
  } else {
    banner.hidden = false;
    banner.textContent = message;
  }
}
