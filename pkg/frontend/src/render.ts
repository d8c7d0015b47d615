// Report rendering: plain HTML strings from a server response body.
//
// Invariant: every number shown comes verbatim from the response (no
// client-side rounding of the headline score; the server is the single
// source of truth for fuzzy math).

import type { EvaluationResponse } from './api';
import { renderAggregateSvg } from './plot';

const escapeHtml = (text: string): string =>
  text.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;').replace(/"/g, '&quot;');

/** The headline score exactly as the server sent it. */
export function renderedScore(response: EvaluationResponse): string {
  return String(response.success_score);
}

export function labelBadge(response: EvaluationResponse): string {
  const slug = response.label.toLowerCase().replace(/\s+/g, '-');
  return `<span class="badge badge-${slug}">${escapeHtml(response.label)}</span>`;
}

export function renderFiredRules(response: EvaluationResponse): string {
  const rows = response.fired_rules
    .map(([id, strength]) => `<li>rule ${id}: strength ${strength.toFixed(4)}</li>`)
    .join('');
  return `<ul class="fired-rules">${rows}</ul>`;
}

export function renderCriterionScores(response: EvaluationResponse): string {
  if (!response.criterion_scores) return '';
  const rows = Object.entries(response.criterion_scores)
    .map(([name, value]) => `<li>${escapeHtml(name)}: ${value.toFixed(2)}</li>`)
    .join('');
  return `<ul class="criterion-scores">${rows}</ul>`;
}

export function renderWarnings(response: EvaluationResponse): string {
  if (!response.warnings || response.warnings.length === 0) return '';
  const rows = response.warnings.map((w) => `<li>${escapeHtml(w)}</li>`).join('');
  return `<ul class="warnings">${rows}</ul>`;
}

export function renderError(message: string): string {
  return `<p class="error" role="alert">${escapeHtml(message)}</p>`;
}

export function renderReport(response: EvaluationResponse): string {
  return [
    `<section class="report" data-revision="${response.rubric_revision}">`,
    `<h2>Project success</h2>`,
    `<p class="score" data-testid="score">${renderedScore(response)}</p>`,
    labelBadge(response),
    renderCriterionScores(response),
    `<h3>Fired rules</h3>`,
    renderFiredRules(response),
    renderAggregateSvg(response),
    renderWarnings(response),
    `</section>`,
  ].join('\n');
}

/** Pulls the displayed score text back out of rendered report HTML. */
export function extractDisplayedScore(html: string): string {
  const match = html.match(/data-testid="score">([^<]*)</);
  if (!match || match[1] === undefined) throw new Error('no score in rendered report');
  return match[1];
}
