/** DOM wiring for the explorer page. */

import { ApiClient } from "./api.js";
import { Controller } from "./controller.js";
import { renderBanner, renderLegend, renderSvg, renderTrail } from "./render.js";

function byId(id: string): HTMLElement {
  const element = document.getElementById(id);
  if (!element) throw new Error(`missing #${id}`);
  return element;
}

const api = new ApiClient("");
const controller = new Controller(api);

const confirmDialog = (message: string) => Promise.resolve(window.confirm(message));

function render(): void {
  const view = controller.view();
  byId("canvas").innerHTML = view.sessionId
    ? renderSvg(view)
    : '<p class="hint">Pick a fixture and press Load to start a walk.</p>';
  byId("banner").innerHTML = renderBanner(view);
  byId("trail").textContent = renderTrail(view);
  byId("legend").innerHTML = renderLegend();
  const stepButton = byId("step") as HTMLButtonElement;
  const next = controller.nextCycleVertex();
  stepButton.disabled = view.busy || next === null;
  stepButton.textContent = next === null ? "Step cycle" : `Step cycle (μ${next})`;
  (byId("undo") as HTMLButtonElement).disabled = view.busy || view.trail.length === 0;
  byId("canvas").classList.toggle("busy", view.busy);
}

async function onCanvasClick(event: Event): Promise<void> {
  const target = event.target as Element | null;
  const group = target?.closest("[data-vertex]");
  if (!group) return;
  const vertex = Number(group.getAttribute("data-vertex"));
  await controller.clickVertex(vertex, confirmDialog);
  render();
}

async function main(): Promise<void> {
  await controller.init();
  const select = byId("fixture") as HTMLSelectElement;
  for (const fixture of controller.fixtures) {
    const option = document.createElement("option");
    option.value = fixture.name;
    option.textContent = `${fixture.name} (length ${fixture.length})`;
    select.appendChild(option);
  }
  byId("load").addEventListener("click", async () => {
    await controller.loadGallery(select.value);
    render();
  });
  byId("step").addEventListener("click", async () => {
    await controller.stepCycle(confirmDialog);
    render();
  });
  byId("undo").addEventListener("click", async () => {
    await controller.undoMove();
    render();
  });
  byId("canvas").addEventListener("click", onCanvasClick);
  render();
}

main().catch((error) => {
  byId("banner").innerHTML = `<div class="banner notice">${String(error)}</div>`;
});
