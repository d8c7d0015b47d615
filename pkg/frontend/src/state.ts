// Form state and client-side validation.  The checks here mirror the
// server's 422 rules so that a valid form never produces a 4xx round trip.

import type { EvaluationRequest } from './api';

export type Weight = 'Low' | 'Medium' | 'High';
export type InputMode = 'manual' | 'upload';

export const CRITERIA = ['clean_code', 'functionality', 'inheritance'] as const;
export type CriterionName = (typeof CRITERIA)[number];

export interface FormState {
  course: string;
  instructor: string;
  student: string;
  mode: InputMode;
  scores: Record<CriterionName, number>;
  weights: Record<CriterionName, Weight>;
  rubricId: string;
  archiveB64: string | null;
}

export function initialFormState(): FormState {
  return {
    course: '',
    instructor: '',
    student: '',
    mode: 'manual',
    scores: { clean_code: 50, functionality: 50, inheritance: 50 },
    weights: { clean_code: 'Medium', functionality: 'Medium', inheritance: 'Medium' },
    rubricId: 'reference',
    archiveB64: null,
  };
}

export function validate(state: FormState): string[] {
  const problems: string[] = [];
  for (const name of CRITERIA) {
    const value = state.scores[name];
    if (!Number.isFinite(value) || value < 0 || value > 100) {
      problems.push(`${name}: score must lie in [0, 100]`);
    }
  }
  if (state.rubricId.trim() === '') {
    problems.push('a rubric must be selected');
  }
  if (state.mode === 'upload' && state.archiveB64 === null) {
    problems.push('upload mode needs a project archive');
  }
  return problems;
}

export function toEvaluationRequest(state: FormState): EvaluationRequest {
  const info: Record<string, unknown> = {};
  if (state.course) info.course = state.course;
  if (state.instructor) info.instructor = state.instructor;
  if (state.student) info.student = state.student;
  const base: EvaluationRequest = {
    rubric_id: state.rubricId,
    ...(Object.keys(info).length > 0 ? { info } : {}),
  };
  if (state.mode === 'upload') {
    return { ...base, archive_b64: state.archiveB64 ?? '' };
  }
  return { ...base, scores: { ...state.scores } };
}
