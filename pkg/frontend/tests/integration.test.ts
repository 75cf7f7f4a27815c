/** End-to-end walk against the real HTTP service.
 *
 * Spawns the Python server, loads the 4-vertex fixture, clicks the
 * closing sequence through the controller, and checks the banner and
 * the point-of-no-return warning.
 */

import { ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../dist/api.js";
import { Controller, NO_RETURN_WARNING } from "../dist/controller.js";

let server: ChildProcess;
let base = "";

function startServer(): Promise<string> {
  return new Promise((resolve, reject) => {
    server = spawn(
      "python3",
      ["-m", "quivercycles.cli", "serve", "--port", "0", "--bind", "127.0.0.1"],
      { cwd: "..", env: { ...process.env, PYTHONPATH: "src" } },
    );
    let buffer = "";
    const timer = setTimeout(() => reject(new Error("server start timeout")), 15000);
    server.stdout!.on("data", (chunk: Buffer) => {
      buffer += chunk.toString();
      const line = buffer.split("\n").find((l) => l.includes("serving"));
      if (line) {
        clearTimeout(timer);
        resolve(JSON.parse(line).serving as string);
      }
    });
    server.on("error", (error) => {
      clearTimeout(timer);
      reject(error);
    });
    server.stderr!.on("data", () => {});
  });
}

beforeAll(async () => {
  base = await startServer();
}, 20000);

afterAll(() => {
  server?.kill();
});

describe("explorer against the live service", () => {
  it("walks the fixture to closure and warns at certified exits", async () => {
    const controller = new Controller(new ApiClient(base));
    await controller.init();
    expect(controller.fixtures.map((f) => f.name)).toContain("cycle8");

    await controller.loadGallery("cycle8");
    const view0 = controller.view();
    expect(view0.vertices).toHaveLength(4);
    // uniform parameters: the base quiver carries weights 2, 6, 10
    const weights0 = view0.arrows.map((a) => a.weight).sort();
    expect(weights0).toEqual(["10", "2", "2", "2", "2", "6"]);

    // the base quiver has certified exits; clicking one asks first
    const certified = view0.vertices.find((v) =>
      v.badges.includes("certified-exit"),
    );
    expect(certified).toBeDefined();
    const warnings: string[] = [];
    const refused = await controller.clickVertex(certified!.label, (message) => {
      warnings.push(message);
      return false;
    });
    expect(refused).toBe("cancelled");
    expect(warnings).toEqual([NO_RETURN_WARNING]);
    expect(controller.view().trail).toEqual([]);

    // the closing walk, clicked vertex by vertex
    for (const v of [4, 1, 2, 3, 2, 1, 2, 1]) {
      const result = await controller.clickVertex(v, () => true);
      expect(result).toBe("ok");
    }
    expect(controller.view().banner).toBe("Cycle closed at length 8");
    expect(controller.view().trail).toEqual([4, 1, 2, 3, 2, 1, 2, 1]);

    // after closure the rendered weights match the base again, verbatim
    const weightsBack = controller.view().arrows.map((a) => a.weight).sort();
    expect(weightsBack).toEqual(weights0);

    // a repeated click is rejected by the server with a 409 notice
    const rejected = await controller.clickVertex(1, () => true);
    expect(rejected).toBe("rejected");
    expect(controller.view().notice).toContain("repeats");

    // undo restores the step count
    await controller.undoMove();
    expect(controller.view().trail).toEqual([4, 1, 2, 3, 2, 1, 2]);
  }, 20000);

  it("mutating at a certified exit hands the new quiver a global descent there", async () => {
    const controller = new Controller(new ApiClient(base));
    await controller.init();
    await controller.loadGallery("cycle8");
    const certified = controller
      .view()
      .vertices.find((v) => v.badges.includes("certified-exit"));
    expect(certified).toBeDefined();
    await controller.clickVertex(certified!.label, () => true);
    expect(controller.analysis!.global_descent).toBe(certified!.label);
    const badge = controller
      .view()
      .vertices.find((v) => v.badges.includes("global-descent"));
    expect(badge!.label).toBe(certified!.label);
  }, 20000);

  it("big weights cross the wire as exact strings", async () => {
    const controller = new Controller(new ApiClient(base));
    await controller.init();
    const big = "9".repeat(60);
    await controller.loadQuiver({
      n: 3,
      b: [
        ["0", big, "-2"],
        [`-${big}`, "0", "3"],
        ["2", "-3", "0"],
      ],
    });
    expect(controller.view().arrows.map((a) => a.weight)).toContain(big);
  }, 20000);
});
