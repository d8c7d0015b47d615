// DOM wiring for the professor evaluation form.
//
// All fuzzy math happens server-side; this module only collects form
// state, issues debounced /evaluate calls (latest wins) and renders the
// returned report.  Weight edits are saved through PUT /rubrics with the
// current revision, then a fresh evaluation is requested.

import { ApiClient, ApiError, EvaluationResponse } from './api';
import { DEBOUNCE_MS, LatestWins, debounce } from './live';
import { renderError, renderReport } from './render';
import { CRITERIA, CriterionName, FormState, Weight, initialFormState, toEvaluationRequest, validate } from './state';

export class App {
  readonly state: FormState = initialFormState();
  private readonly latest = new LatestWins<EvaluationResponse>();
  private rubricRevision = 1;
  private readonly requestEvaluate: () => void;

  constructor(
    private readonly api: ApiClient,
    private readonly reportEl: { innerHTML: string },
    debounceMs: number = DEBOUNCE_MS
  ) {
    this.requestEvaluate = debounce(() => void this.evaluateNow(), debounceMs);
  }

  setScore(name: CriterionName, value: number): void {
    this.state.scores[name] = value;
    this.requestEvaluate();
  }

  setMode(mode: FormState['mode']): void {
    this.state.mode = mode;
    this.requestEvaluate();
  }

  setArchive(base64: string): void {
    this.state.archiveB64 = base64;
    this.requestEvaluate();
  }

  selectRubric(rubricId: string): void {
    this.state.rubricId = rubricId;
    this.requestEvaluate();
  }

  /** Persists a weight change into the rubric document, then re-evaluates. */
  async setWeight(name: CriterionName, weight: Weight): Promise<void> {
    this.state.weights[name] = weight;
    const entry = await this.api.getRubric(this.state.rubricId);
    const criteria = entry.document.criteria as Array<Record<string, unknown>>;
    for (const criterion of criteria) {
      if (criterion.name === name) criterion.weight = weight;
    }
    const updated = await this.api.putRubric(this.state.rubricId, entry.document, entry.revision);
    this.rubricRevision = updated.revision;
    await this.evaluateNow();
  }

  async evaluateNow(): Promise<EvaluationResponse | null> {
    const problems = validate(this.state);
    if (problems.length > 0) {
      this.reportEl.innerHTML = problems.map(renderError).join('');
      return null;
    }
    try {
      const response = await this.latest.run((signal) =>
        this.api.evaluate(toEvaluationRequest(this.state), signal)
      );
      if (response === null) return null; // superseded by a newer request
      this.rubricRevision = response.rubric_revision;
      this.reportEl.innerHTML = renderReport(response);
      return response;
    } catch (error) {
      const message = error instanceof ApiError ? error.detail : String(error);
      this.reportEl.innerHTML = renderError(message);
      return null;
    }
  }

  get revision(): number {
    return this.rubricRevision;
  }
}

function bind(app: App, doc: Document): void {
  for (const name of CRITERIA) {
    const slider = doc.getElementById(`slider-${name}`) as HTMLInputElement | null;
    slider?.addEventListener('input', () => app.setScore(name, Number(slider.value)));
    const weight = doc.getElementById(`weight-${name}`) as HTMLSelectElement | null;
    weight?.addEventListener('change', () => void app.setWeight(name, weight.value as Weight));
  }
  const rubric = doc.getElementById('rubric-select') as HTMLSelectElement | null;
  rubric?.addEventListener('change', () => app.selectRubric(rubric.value));
  void app.evaluateNow();
}

export function mount(doc: Document, baseUrl = ''): App {
  const reportEl = doc.getElementById('report');
  if (reportEl === null) throw new Error('missing #report element');
  const app = new App(new ApiClient(baseUrl), reportEl);
  bind(app, doc);
  return app;
}

if (typeof document !== 'undefined' && document.getElementById('report') !== null) {
  mount(document);
}
