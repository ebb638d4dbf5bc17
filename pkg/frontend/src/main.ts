import { StorynetClient } from "./api";
import { GraphView } from "./graphView";
import { RawWordList } from "./rawWordList";
import { buildParameterPanel } from "./sliders";
import { CurationStore } from "./state";

const SERVICE_URL = (window as { STORYNET_URL?: string }).STORYNET_URL ?? "http://127.0.0.1:7414";

function byId<T extends HTMLElement>(id: string): T {
  const element = document.getElementById(id);
  if (!element) throw new Error(`missing #${id}`);
  return element as T;
}

function download(filename: string, text: string): void {
  const blob = new Blob([text], { type: "text/vnd.graphviz" });
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = filename;
  anchor.click();
  URL.revokeObjectURL(url);
}

function renderRegistry(
  container: HTMLElement,
  store: CurationStore,
  rawWordList: RawWordList,
): void {
  let selected: string | null = null;
  store.subscribe((state) => {
    container.replaceChildren();
    if (state.registry.length === 0) {
      const hint = document.createElement("p");
      hint.className = "hint";
      hint.textContent = "No names yet — pick words from the list on the left.";
      container.append(hint);
      return;
    }
    for (const entry of state.registry) {
      const row = document.createElement("div");
      row.className = `registry-entry ${entry.type}` + (selected === entry.id ? " selected" : "");
      const title = document.createElement("span");
      title.textContent = `${entry.variants[0]} (${entry.type}) — ${entry.variants.join(", ")}`;
      title.addEventListener("click", () => {
        selected = selected === entry.id ? null : entry.id;
        rawWordList.selectName(selected);
        store.clearBanner();
      });
      const remove = document.createElement("button");
      remove.type = "button";
      remove.textContent = "remove";
      remove.addEventListener("click", () => void store.removeName(entry.id));
      row.append(title, remove);
      container.append(row);
    }
  });
}

function main(): void {
  const store = new CurationStore(new StorynetClient(SERVICE_URL));
  const graph = new GraphView(byId<HTMLElement>("graph") as unknown as SVGSVGElement);
  const rawWordList = new RawWordList(byId("raw-words"), store);
  buildParameterPanel(byId("parameters"), store);
  renderRegistry(byId("registry"), store, rawWordList);

  const banner = byId("banner");
  const summary = byId("summary");
  const exportButton = byId<HTMLButtonElement>("export");
  const saveButton = byId<HTMLButtonElement>("save");

  store.subscribe((state) => {
    banner.textContent = state.banner ?? "";
    banner.style.display = state.banner ? "block" : "none";
    summary.textContent = state.sessionId
      ? `${state.documents} documents, ${state.tokens} tokens` +
        (state.dirty ? " — unsaved changes" : "")
      : "no project open";
    exportButton.disabled = !store.exportEnabled;
    saveButton.disabled = !state.sessionId;
    if (state.network) graph.render(state.network);
  });

  byId<HTMLButtonElement>("open-folder").addEventListener("click", () => {
    const folder = byId<HTMLInputElement>("folder-path").value.trim();
    if (folder) void store.openFolder(folder).catch((error) => alert(String(error)));
  });
  byId<HTMLButtonElement>("open-project").addEventListener("click", () => {
    const path = byId<HTMLInputElement>("project-path").value.trim();
    if (path) void store.openProjectFile(path).catch((error) => alert(String(error)));
  });
  exportButton.addEventListener("click", () => {
    void store
      .exportGv()
      .then((text) => download("network.gv", text))
      .catch((error) => alert(String(error)));
  });
  saveButton.addEventListener("click", () => {
    const path = byId<HTMLInputElement>("save-path").value.trim();
    if (path) void store.save(path);
  });
}

main();
