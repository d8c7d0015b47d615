// Aggregate-curve rendering.  The polyline is built directly from the
// server-returned samples and the centroid marker from the server score,
// so the picture can never disagree with the numbers next to it.

import type { EvaluationResponse } from './api';

export interface PlotOptions {
  width: number;
  height: number;
  padding: number;
}

const DEFAULTS: PlotOptions = { width: 640, height: 220, padding: 24 };

export function curvePoints(
  aggregate: EvaluationResponse['aggregate'],
  options: PlotOptions = DEFAULTS
): Array<[number, number]> {
  const [lo, hi] = aggregate.domain;
  const { width, height, padding } = options;
  const innerW = width - 2 * padding;
  const innerH = height - 2 * padding;
  return aggregate.mu.map((mu, i) => {
    const x = lo + ((hi - lo) * i) / (aggregate.mu.length - 1);
    const px = padding + ((x - lo) / (hi - lo)) * innerW;
    const py = padding + (1 - mu) * innerH;
    return [px, py];
  });
}

export function centroidX(
  response: EvaluationResponse,
  options: PlotOptions = DEFAULTS
): number {
  const [lo, hi] = response.aggregate.domain;
  const { width, padding } = options;
  return padding + ((response.success_score - lo) / (hi - lo)) * (width - 2 * padding);
}

export function renderAggregateSvg(
  response: EvaluationResponse,
  options: PlotOptions = DEFAULTS
): string {
  const { width, height, padding } = options;
  const points = curvePoints(response.aggregate, options)
    .map(([px, py]) => `${px.toFixed(2)},${py.toFixed(2)}`)
    .join(' ');
  const cx = centroidX(response, options);
  return [
    `<svg viewBox="0 0 ${width} ${height}" role="img" aria-label="aggregate membership curve">`,
    `<polyline points="${points}" fill="none" stroke="#2563eb" stroke-width="1.5"/>`,
    `<line class="centroid" x1="${cx.toFixed(2)}" y1="${padding}" x2="${cx.toFixed(2)}" y2="${height - padding}" stroke="#dc2626" stroke-dasharray="4 3"/>`,
    `</svg>`,
  ].join('');
}
