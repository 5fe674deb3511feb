// Wires the panels together: query form, title list, graph canvas,
// balance slider and class controls, click-to-refine, back button.
// Responses are applied latest-wins per panel, so what is on screen is
// always the payload of the newest request that completed.

import { fetchGraph, fetchSearch, type FetchLike } from "./api.js";
import { renderGraph, renderTitles } from "./render.js";
import { SessionState, type PanelSnapshot } from "./state.js";
import type { GraphParamsEcho } from "./types.js";

export interface AppOptions {
  baseUrl?: string;
  fetchFn?: FetchLike;
  debounceMs?: number;
}

const SKELETON = `
  <header class="toolbar">
    <form class="query-form">
      <input class="query-input" type="text" placeholder="enter query words" aria-label="query" />
      <button type="submit">search</button>
    </form>
    <button type="button" class="back-button" disabled>back</button>
    <span class="status" role="status"></span>
  </header>
  <div class="panels">
    <section class="results-panel">
      <h2>documents</h2>
      <div class="result-count"></div>
      <ul class="title-list"></ul>
    </section>
    <section class="graph-panel">
      <svg class="graph-canvas" role="img" aria-label="topic word graph"></svg>
    </section>
  </div>
  <fieldset class="controls">
    <label>balance
      <input class="balance-slider" type="range" min="-1" max="1" step="0.05" value="0" />
      <output class="balance-value">0.00</output>
    </label>
    <label>words
      <input class="words-input" type="number" min="1" max="100" value="15" />
    </label>
    <label>classes
      <input class="classes-input" type="number" min="1" max="12" value="3" />
    </label>
    <label>lower limit
      <input class="lower-input" type="number" min="0" max="1" step="0.001" value="0.03125" />
    </label>
    <label>mode
      <select class="mode-select">
        <option value="classed">classed</option>
        <option value="plain">plain</option>
      </select>
    </label>
  </fieldset>
`;

export class GraphExplorer {
  readonly state = new SessionState();

  private readonly baseUrl: string;
  private readonly fetchFn: FetchLike;
  private readonly debounceMs: number;

  private readonly queryInput: HTMLInputElement;
  private readonly backButton: HTMLButtonElement;
  private readonly status: HTMLElement;
  private readonly resultCount: HTMLElement;
  private readonly titleList: HTMLElement;
  private readonly canvas: SVGSVGElement;
  private readonly balanceSlider: HTMLInputElement;
  private readonly balanceValue: HTMLElement;
  private readonly wordsInput: HTMLInputElement;
  private readonly classesInput: HTMLInputElement;
  private readonly lowerInput: HTMLInputElement;
  private readonly modeSelect: HTMLSelectElement;

  // Monotone tickets per panel; a response is applied only if it still
  // carries the newest ticket, so older in-flight requests lose.
  private searchSeq = 0;
  private graphSeq = 0;

  private debounceTimer: ReturnType<typeof setTimeout> | undefined;
  private pendingOps = 0;

  constructor(root: HTMLElement, options: AppOptions = {}) {
    this.baseUrl = options.baseUrl ?? "";
    this.fetchFn = options.fetchFn ?? ((url: string) => fetch(url));
    this.debounceMs = options.debounceMs ?? 150;

    root.innerHTML = SKELETON;
    const pick = <T extends Element>(selector: string): T => {
      const found = root.querySelector<T>(selector);
      if (!found) throw new Error(`missing element: ${selector}`);
      return found;
    };
    this.queryInput = pick<HTMLInputElement>(".query-input");
    this.backButton = pick<HTMLButtonElement>(".back-button");
    this.status = pick<HTMLElement>(".status");
    this.resultCount = pick<HTMLElement>(".result-count");
    this.titleList = pick<HTMLElement>(".title-list");
    this.canvas = pick<SVGSVGElement>(".graph-canvas");
    this.balanceSlider = pick<HTMLInputElement>(".balance-slider");
    this.balanceValue = pick<HTMLElement>(".balance-value");
    this.wordsInput = pick<HTMLInputElement>(".words-input");
    this.classesInput = pick<HTMLInputElement>(".classes-input");
    this.lowerInput = pick<HTMLInputElement>(".lower-input");
    this.modeSelect = pick<HTMLSelectElement>(".mode-select");

    pick<HTMLFormElement>(".query-form").addEventListener("submit", (event) => {
      event.preventDefault();
      const text = this.queryInput.value.trim();
      if (text) void this.submitQuery(text);
    });
    this.backButton.addEventListener("click", () => this.goBack());
    this.canvas.addEventListener("click", (event) => {
      const target = event.target as Element | null;
      const node = target?.closest?.("g.node");
      const word = node?.getAttribute("data-word");
      if (word) void this.refineOn(word);
    });

    this.balanceSlider.addEventListener("input", () => {
      this.state.params.b = Number(this.balanceSlider.value);
      this.balanceValue.textContent = this.state.params.b.toFixed(2);
      this.scheduleGraphRefresh();
    });
    this.wordsInput.addEventListener("input", () => {
      this.state.params.n = Math.max(1, Number(this.wordsInput.value) || 1);
      this.scheduleGraphRefresh();
    });
    this.classesInput.addEventListener("input", () => {
      this.state.params.c = Math.max(1, Number(this.classesInput.value) || 1);
      this.scheduleGraphRefresh();
    });
    this.lowerInput.addEventListener("input", () => {
      this.state.params.l = Number(this.lowerInput.value) || 0;
      this.scheduleGraphRefresh();
    });
    this.modeSelect.addEventListener("change", () => {
      this.state.params.mode = this.modeSelect.value;
      this.scheduleGraphRefresh();
    });

    this.status.textContent = "enter a query to build a topic word graph";
  }

  // Resolves once no fetch is in flight and no refresh is scheduled.
  async whenIdle(): Promise<void> {
    while (this.pendingOps > 0 || this.debounceTimer !== undefined) {
      await new Promise((resolve) => setTimeout(resolve, 5));
    }
  }

  // New query: both panels refetch together and commit atomically, so
  // the title list and graph never show different retrievals.
  async submitQuery(text: string, push = true): Promise<void> {
    const searchTicket = ++this.searchSeq;
    const graphTicket = ++this.graphSeq;
    this.pendingOps += 1;
    this.status.textContent = "searching...";
    try {
      const [search, graph] = await Promise.all([
        fetchSearch(this.fetchFn, this.baseUrl, text),
        fetchGraph(this.fetchFn, this.baseUrl, text, this.state.params),
      ]);
      if (searchTicket !== this.searchSeq || graphTicket !== this.graphSeq) {
        return;
      }
      this.state.commit({ query: text, search, graph }, push);
      this.showSnapshot(this.state.current!);
      this.status.textContent = "";
    } catch (error) {
      if (searchTicket === this.searchSeq && graphTicket === this.graphSeq) {
        this.status.textContent = `query failed: ${(error as Error).message}`;
      }
    } finally {
      this.pendingOps -= 1;
    }
  }

  async refineOn(word: string): Promise<void> {
    const current = this.state.current;
    if (!current) return;
    await this.submitQuery(`${current.query} ${word}`, true);
  }

  // Parameter changes only reshape the graph; retrieval is unchanged,
  // so the title list is left alone and nothing is pushed to history.
  private scheduleGraphRefresh(): void {
    if (this.debounceTimer !== undefined) clearTimeout(this.debounceTimer);
    this.debounceTimer = setTimeout(() => {
      this.debounceTimer = undefined;
      void this.refreshGraph();
    }, this.debounceMs);
  }

  private async refreshGraph(): Promise<void> {
    const current = this.state.current;
    if (!current) return;
    const ticket = ++this.graphSeq;
    this.pendingOps += 1;
    try {
      const graph = await fetchGraph(
        this.fetchFn,
        this.baseUrl,
        current.query,
        this.state.params,
      );
      if (ticket !== this.graphSeq) return;
      this.state.updateGraph(graph);
      renderGraph(this.canvas, graph);
      this.status.textContent = "";
    } catch (error) {
      if (ticket === this.graphSeq) {
        this.status.textContent = `graph update failed: ${(error as Error).message}`;
      }
    } finally {
      this.pendingOps -= 1;
    }
  }

  // Back restores both panels from the stored payloads; no refetch.
  // Bumping the tickets discards any response still in flight.
  goBack(): void {
    const prev = this.state.back();
    if (!prev) return;
    this.searchSeq += 1;
    this.graphSeq += 1;
    if (this.debounceTimer !== undefined) {
      clearTimeout(this.debounceTimer);
      this.debounceTimer = undefined;
    }
    this.adoptParams(prev.graph.params);
    this.showSnapshot(prev);
    this.status.textContent = "";
  }

  private showSnapshot(snapshot: PanelSnapshot): void {
    this.queryInput.value = snapshot.query;
    renderTitles(this.resultCount, this.titleList, snapshot.search);
    renderGraph(this.canvas, snapshot.graph);
    this.backButton.disabled = this.state.depth === 0;
  }

  private adoptParams(echo: GraphParamsEcho): void {
    this.state.params = {
      n: echo.n,
      c: echo.c,
      l: echo.l,
      b: echo.b,
      mode: echo.mode,
    };
    this.balanceSlider.value = String(echo.b);
    this.balanceValue.textContent = echo.b.toFixed(2);
    this.wordsInput.value = String(echo.n);
    this.classesInput.value = String(echo.c);
    this.lowerInput.value = String(echo.l);
    this.modeSelect.value = echo.mode;
  }
}
