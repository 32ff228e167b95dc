import { describe, expect, it } from 'vitest';

import {
  applyMutation,
  applyUndo,
  badgeText,
  canUndo,
  historyLength,
  initViewModel,
} from '../src/model.js';
import { forceLayout } from '../src/layout.js';
import { Classification, QuiverJson } from '../src/types.js';

const D4: QuiverJson = { n: 4, m: 2, arrows: [[1, 2, 0], [2, 3, 0], [2, 4, 0]] };
const MUTATED: QuiverJson = { n: 4, m: 2, arrows: [[1, 2, 1], [2, 3, 1], [2, 4, 1]] };
const TYPE_I: Classification = {
  verdict: 'TypeI', a: 3, b: 4, x: [2], y: [], components: [[1, 2]], both_types: false,
};

function fresh() {
  return initViewModel(D4, forceLayout(D4));
}

describe('view model', () => {
  it('starts with an empty history cursor', () => {
    const vm = fresh();
    expect(vm.cursor).toBe(0);
    expect(canUndo(vm)).toBe(false);
    expect(historyLength(vm)).toBe(0);
    expect(badgeText(vm)).toBe('…');
  });

  it('rejects invalid payloads up front', () => {
    expect(() =>
      initViewModel({ n: 2, m: 1, arrows: [[1, 1, 0]] }, new Map()),
    ).toThrow(/loop/);
  });

  it('extends history on mutation and moves the cursor', () => {
    let vm = fresh();
    vm = applyMutation(vm, MUTATED, TYPE_I);
    expect(vm.cursor).toBe(1);
    expect(vm.quiver).toEqual(MUTATED);
    expect(badgeText(vm)).toBe('TypeI');
    expect(canUndo(vm)).toBe(true);
  });

  it('keeps the invalid-server-payload guard', () => {
    const vm = fresh();
    const bad = { n: 4, m: 2, arrows: [[1, 1, 0]] } as QuiverJson;
    const next = applyMutation(vm, bad, TYPE_I);
    expect(next.cursor).toBe(0);
    expect(next.notice).toMatch(/invalid quiver/);
  });

  it('undo steps the cursor back within bounds', () => {
    let vm = fresh();
    vm = applyMutation(vm, MUTATED, TYPE_I);
    vm = applyUndo(vm, D4, TYPE_I);
    expect(vm.cursor).toBe(0);
    expect(vm.quiver).toEqual(D4);
    const again = applyUndo(vm, D4, TYPE_I);
    expect(again.notice).toMatch(/nothing to undo/);
    expect(again.cursor).toBe(0);
  });

  it('truncates the redo branch on a new mutation', () => {
    let vm = fresh();
    vm = applyMutation(vm, MUTATED, TYPE_I);
    vm = applyUndo(vm, D4, TYPE_I);
    vm = applyMutation(vm, MUTATED, TYPE_I);
    expect(vm.history).toHaveLength(2);
    expect(vm.cursor).toBe(1);
  });
});
