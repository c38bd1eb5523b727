import { describe, expect, it } from "vitest";

import { lineMarkers, markerTarget } from "../src/markers.js";
import type { VcResult, VerifyReport } from "../src/types.js";

function vc(id: string, line: number, status: VcResult["status"]): VcResult {
  return { id, line, kind: "operation-precondition", status, ms: 1,
           goal: "g", givens: [], description: "d" };
}

function report(vcs: VcResult[]): VerifyReport {
  const proved = vcs.filter((v) => v.status === "proved").length;
  return {
    module: "M", diagnostics: [], vcs,
    totals: { proved, unprovable: vcs.length - proved, timeout: 0, ms: 1 },
  };
}

describe("lineMarkers", () => {
  it("emits one marker per distinct line, in line order", () => {
    const r = report([vc("0_1", 7, "proved"), vc("0_2", 7, "proved"),
                      vc("0_3", 9, "proved"), vc("0_4", 5, "proved")]);
    const markers = lineMarkers(r);
    expect(markers.map((m) => m.line)).toEqual([5, 7, 9]);
    // marker-report consistency: gutter lines equal report lines
    expect(new Set(markers.map((m) => m.line)))
      .toEqual(new Set(r.vcs.map((v) => v.line)));
  });

  it("goes yellow when any VC on the line is open", () => {
    const r = report([vc("0_1", 7, "proved"), vc("0_2", 7, "unprovable")]);
    expect(lineMarkers(r)[0]).toMatchObject({ line: 7, state: "open" });
  });

  it("is green only when every VC proved", () => {
    const r = report([vc("0_1", 7, "proved"), vc("0_2", 7, "proved")]);
    expect(lineMarkers(r)[0]!.state).toBe("proved");
  });

  it("lists the anchored VC ids for the hover preview", () => {
    const r = report([vc("0_1", 7, "proved"), vc("0_2", 7, "unprovable")]);
    expect(lineMarkers(r)[0]!.vcIds).toEqual(["0_1", "0_2"]);
  });

  it("treats a timeout as open", () => {
    const r = report([vc("0_1", 3, "timeout")]);
    expect(lineMarkers(r)[0]!.state).toBe("open");
  });
});

describe("markerTarget", () => {
  it("prefers the first unprovable VC on the line", () => {
    const r = report([vc("0_1", 7, "proved"), vc("0_2", 7, "unprovable"),
                      vc("0_3", 7, "unprovable")]);
    expect(markerTarget(r, 7)?.id).toBe("0_2");
  });

  it("falls back to the first VC when all proved", () => {
    const r = report([vc("0_1", 7, "proved"), vc("0_2", 7, "proved")]);
    expect(markerTarget(r, 7)?.id).toBe("0_1");
  });
});
