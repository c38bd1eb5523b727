import type { VcResult, VerifyReport } from "./types.js";

export type MarkerState = "proved" | "open";

export interface LineMarker {
  line: number;
  state: MarkerState;          // green check when every VC on the line proved
  vcIds: string[];             // shown on hover, in report order
}

/** One gutter marker per line that generated VCs; yellow the moment any VC
 * anchored there is not proved. The marker set must equal the set of
 * distinct lines in the report. */
export function lineMarkers(report: VerifyReport): LineMarker[] {
  const byLine = new Map<number, VcResult[]>();
  for (const vc of report.vcs) {
    const bucket = byLine.get(vc.line) ?? [];
    bucket.push(vc);
    byLine.set(vc.line, bucket);
  }
  const markers: LineMarker[] = [];
  for (const [line, vcs] of byLine) {
    markers.push({
      line,
      state: vcs.every((vc) => vc.status === "proved") ? "proved" : "open",
      vcIds: vcs.map((vc) => vc.id),
    });
  }
  markers.sort((a, b) => a.line - b.line);
  return markers;
}

/** The VC a marker click should open: the first unprovable one on the line,
 * else the first one. Keeps every unprovable VC within two clicks. */
export function markerTarget(report: VerifyReport, line: number): VcResult | undefined {
  const onLine = report.vcs.filter((vc) => vc.line === line);
  return onLine.find((vc) => vc.status !== "proved") ?? onLine[0];
}

export function vcById(report: VerifyReport, id: string): VcResult | undefined {
  return report.vcs.find((vc) => vc.id === id);
}
