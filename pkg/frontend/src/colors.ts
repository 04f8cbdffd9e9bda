/** Thread tints from a fixed palette keyed by root unit id.
 *
 * Keying by root id means a thread keeps its color across mutations for as
 * long as its root survives; merging threads adopts the surviving root's
 * color with no reshuffling of the others.
 */

export const PALETTE = [
  "#dbeafe",
  "#dcfce7",
  "#fef3c7",
  "#fce7f3",
  "#ede9fe",
  "#ccfbf1",
  "#fee2e2",
  "#e2e8f0",
  "#fef9c3",
  "#ffedd5",
  "#d1fae5",
  "#e0e7ff",
] as const;

export function colorForRoot(root: number): string {
  const n = PALETTE.length;
  return PALETTE[((root % n) + n) % n];
}
