import { describe, expect, it } from 'vitest';

import type { EvaluationResponse } from '../src/api';
import { centroidX, curvePoints, renderAggregateSvg } from '../src/plot';
import { extractDisplayedScore, renderError, renderReport, renderedScore } from '../src/render';

function response(overrides: Partial<EvaluationResponse> = {}): EvaluationResponse {
  return {
    success_score: 63.23992501894067,
    label: 'Average',
    fired_rules: [
      [1, 0.25],
      [5, 0.6133],
    ],
    aggregate: { domain: [0, 100], resolution: 5, mu: [0, 0.5, 1, 0.5, 0] },
    criterion_scores: { clean_code: 61, functionality: 74, inheritance: 68 },
    rubric_revision: 1,
    ...overrides,
  };
}

describe('report rendering', () => {
  it('shows the server score verbatim, no client rounding', () => {
    const body = response();
    const html = renderReport(body);
    expect(extractDisplayedScore(html)).toBe('63.23992501894067');
    expect(renderedScore(body)).toBe(String(body.success_score));
  });

  it('renders the label badge and fired rules', () => {
    const html = renderReport(response());
    expect(html).toContain('badge-average');
    expect(html).toContain('rule 1: strength 0.2500');
    expect(html).toContain('rule 5: strength 0.6133');
  });

  it('tags the report with the rubric revision', () => {
    expect(renderReport(response({ rubric_revision: 7 }))).toContain('data-revision="7"');
  });

  it('surfaces warnings instead of dropping them', () => {
    const html = renderReport(response({ warnings: ['Broken.java: unbalanced braces'] }));
    expect(html).toContain('Broken.java: unbalanced braces');
  });

  it('escapes markup in error messages', () => {
    expect(renderError('<script>alert(1)</script>')).not.toContain('<script>');
  });
});

describe('aggregate plot', () => {
  it('maps the sample grid onto the drawing area', () => {
    const points = curvePoints(response().aggregate, { width: 100, height: 100, padding: 0 });
    expect(points).toHaveLength(5);
    expect(points[0]).toEqual([0, 100]);
    expect(points[2]).toEqual([50, 0]);
    expect(points[4]).toEqual([100, 100]);
  });

  it('places the centroid marker at the server score', () => {
    const x = centroidX(response({ success_score: 25 }), { width: 100, height: 100, padding: 0 });
    expect(x).toBe(25);
  });

  it('emits one polyline and one centroid line', () => {
    const svg = renderAggregateSvg(response());
    expect(svg.match(/<polyline/g)).toHaveLength(1);
    expect(svg.match(/class="centroid"/g)).toHaveLength(1);
  });
});
