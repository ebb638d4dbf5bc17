import type { CurationStore } from "./state";
import type { NameKind } from "./types";

/**
 * The raw-word table: one row per candidate word with its counts, an
 * "assigned" marker, and the three curation actions (new character, new
 * place, add as variant of the selected name).
 */
export class RawWordList {
  private selectedNameId: string | null = null;

  constructor(
    private readonly container: HTMLElement,
    private readonly store: CurationStore,
  ) {
    store.subscribe(() => this.render());
  }

  selectName(nameId: string | null): void {
    this.selectedNameId = nameId;
    this.render();
  }

  private render(): void {
    const { rawWords, rawWordsTotal, filters } = this.store.state;
    this.container.replaceChildren();

    const controls = document.createElement("div");
    controls.className = "rawword-controls";
    controls.append(
      this.numberFilter("min count", filters.minCount, (v) =>
        this.store.setFilters({ minCount: v }),
      ),
      this.numberFilter("min length", filters.minLength, (v) =>
        this.store.setFilters({ minLength: v }),
      ),
      this.sortToggle(),
    );
    this.container.append(controls);

    const table = document.createElement("table");
    table.className = "rawwords";
    const head = table.createTHead().insertRow();
    for (const text of ["word", "count", "docs", ""]) {
      const th = document.createElement("th");
      th.textContent = text;
      head.append(th);
    }
    const body = table.createTBody();
    for (const row of rawWords) {
      const tr = body.insertRow();
      tr.className = row.assigned ? "assigned" : "";
      tr.insertCell().textContent = row.word;
      tr.insertCell().textContent = String(row.count);
      tr.insertCell().textContent = String(row.doc_coverage);
      const actions = tr.insertCell();
      if (!row.assigned) {
        actions.append(
          this.actionButton("+char", () => void this.assign(row.word, "char")),
          this.actionButton("+place", () => void this.assign(row.word, "place")),
        );
        if (this.selectedNameId) {
          actions.append(
            this.actionButton("+variant", () =>
              void this.store.addVariant(this.selectedNameId as string, row.word),
            ),
          );
        }
      }
    }
    this.container.append(table);

    const footer = document.createElement("div");
    footer.className = "rawword-footer";
    footer.textContent = `${rawWords.length} of ${rawWordsTotal} candidate words`;
    this.container.append(footer);
  }

  private assign(word: string, kind: NameKind): Promise<unknown> {
    return this.store.addName(word, kind);
  }

  private actionButton(label: string, onClick: () => void): HTMLButtonElement {
    const button = document.createElement("button");
    button.type = "button";
    button.textContent = label;
    button.addEventListener("click", onClick);
    return button;
  }

  private numberFilter(label: string, value: number, onChange: (v: number) => void): HTMLElement {
    const wrap = document.createElement("label");
    wrap.textContent = label + " ";
    const input = document.createElement("input");
    input.type = "number";
    input.min = "1";
    input.value = String(value);
    input.addEventListener("change", () => onChange(Math.max(1, Number(input.value) || 1)));
    wrap.append(input);
    return wrap;
  }

  private sortToggle(): HTMLElement {
    const wrap = document.createElement("label");
    wrap.textContent = "sort by ";
    const select = document.createElement("select");
    for (const option of ["count", "word"] as const) {
      const element = document.createElement("option");
      element.value = option;
      element.textContent = option;
      element.selected = this.store.state.filters.sortBy === option;
      select.append(element);
    }
    select.addEventListener("change", () =>
      this.store.setFilters({ sortBy: select.value as "count" | "word" }),
    );
    wrap.append(select);
    return wrap;
  }
}
