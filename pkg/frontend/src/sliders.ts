import { SLIDER_RANGES } from "./params";
import type { CurationStore } from "./state";

/** Parameter sliders; drag previews through the debounce, release refreshes. */
export function buildParameterPanel(container: HTMLElement, store: CurationStore): void {
  container.replaceChildren();

  for (const [name, range] of Object.entries(SLIDER_RANGES) as [
    keyof typeof SLIDER_RANGES,
    (typeof SLIDER_RANGES)[keyof typeof SLIDER_RANGES],
  ][]) {
    const row = document.createElement("div");
    row.className = "slider-row";

    const label = document.createElement("label");
    label.textContent = range.label;

    const input = document.createElement("input");
    input.type = "range";
    input.min = String(range.min);
    input.max = String(range.max);
    input.step = String(range.step);
    input.value = String(store.state.params[name]);

    const value = document.createElement("span");
    value.className = "slider-value";
    value.textContent = String(store.state.params[name]);

    input.addEventListener("input", () => {
      void store.setParam(name, input.value);
    });
    input.addEventListener("change", () => {
      void store.setParam(name, input.value, true);
    });

    store.subscribe((state) => {
      input.value = String(state.params[name]);
      value.textContent = String(state.params[name]);
    });

    row.append(label, input, value);
    container.append(row);
  }

  const kernelRow = document.createElement("div");
  kernelRow.className = "slider-row";
  const kernelLabel = document.createElement("label");
  kernelLabel.textContent = "kernel";
  const select = document.createElement("select");
  for (const option of ["linear", "exponential"]) {
    const item = document.createElement("option");
    item.value = option;
    item.textContent = option;
    select.append(item);
  }
  select.addEventListener("change", () => {
    void store.setParam("kernel", select.value, true);
  });
  store.subscribe((state) => {
    select.value = state.params.kernel;
  });
  kernelRow.append(kernelLabel, select);
  container.append(kernelRow);
}
