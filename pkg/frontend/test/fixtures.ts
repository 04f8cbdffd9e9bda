/** Golden payloads captured verbatim from a running annotation service.
 *
 * Tests deep-copy these; never mutate them in place.
 */

import type { DialogueBody, Listing, Taxonomy } from "../src/types.js";

export const TAXONOMY = {
  dialog_acts: [
    { category: "Statements", name: "Statement" },
    { category: "Statements", name: "Opinion" },
    { category: "CommunicativeStatus", name: "Self-talk" },
    { category: "CommunicativeStatus", name: "Abandoned" },
    { category: "BackwardCommunicativeFunction", name: "Answer" },
    { category: "BackwardCommunicativeFunction", name: "Stalling" },
    { category: "BackwardCommunicativeFunction", name: "Accept" },
    { category: "BackwardCommunicativeFunction", name: "Reject" },
    { category: "BackwardCommunicativeFunction", name: "Collaborative-Completion" },
    { category: "BackwardCommunicativeFunction", name: "Appreciation" },
    { category: "BackwardCommunicativeFunction", name: "Downplayer" },
    { category: "BackwardCommunicativeFunction", name: "Sympathy" },
    { category: "BackwardCommunicativeFunction", name: "Acknowledge" },
    { category: "BackwardCommunicativeFunction", name: "Signal-non-understanding" },
    { category: "ForwardCommunicativeFunction", name: "Task-Management" },
    { category: "ForwardCommunicativeFunction", name: "Offer" },
    { category: "ForwardCommunicativeFunction", name: "Action-Directive" },
    { category: "ForwardCommunicativeFunction", name: "Commit" },
    { category: "ForwardCommunicativeFunction", name: "Question/Info-request" },
    { category: "ForwardCommunicativeFunction", name: "Open-Question" },
    { category: "ForwardCommunicativeFunction", name: "Rhetorical-Question" },
    { category: "ForwardCommunicativeFunction", name: "Apology" },
    { category: "ForwardCommunicativeFunction", name: "Thanking" },
    { category: "ForwardCommunicativeFunction", name: "Exclamation" },
    { category: "ForwardCommunicativeFunction", name: "Explicit-performative" },
    { category: "ForwardCommunicativeFunction", name: "Welcome" },
    { category: "InformationLevel", name: "Greeting" },
    { category: "InformationLevel", name: "Correction" },
    { category: "InformationLevel", name: "Conventional-closing" },
    { category: "Other", name: "Hedge" },
    { category: "Other", name: "Joke" },
  ],
  rhetorical: [
    { class: "Temporal", dual: "Async", name: "Async", symmetric: false },
    { class: "Temporal", name: "Sync", symmetric: true },
    { class: "Temporal", dual: "After", name: "Before", symmetric: false },
    { class: "Temporal", dual: "Before", name: "After", symmetric: false },
    { class: "Contingency", dual: "Cause", name: "Cause", symmetric: false },
    { class: "Contingency", dual: "Justify", name: "Justify", symmetric: false },
    { class: "Contingency", dual: "Motivation", name: "Motivation", symmetric: false },
    { class: "Contingency", dual: "Condition", name: "Condition", symmetric: false },
    { class: "Contingency", dual: "Neg-Condition", name: "Neg-Condition", symmetric: false },
    { class: "Contingency", dual: "Purpose", name: "Purpose", symmetric: false },
    { class: "Contingency", dual: "Enablement", name: "Enablement", symmetric: false },
    { class: "Contingency", dual: "Result", name: "Reason", symmetric: false },
    { class: "Contingency", dual: "Reason", name: "Result", symmetric: false },
    { class: "Contingency", dual: "Evaluation", name: "Evaluation", symmetric: false },
    { class: "Comparison", name: "Contrast", symmetric: true },
    { class: "Comparison", name: "Similarity", symmetric: true },
    { class: "Comparison", dual: "Concession", name: "Concession", symmetric: false },
    { class: "Expansion", dual: "Expansion", name: "Expansion", symmetric: false },
    { class: "Expansion", dual: "Instantiation", name: "Instantiation", symmetric: false },
    { class: "Expansion", dual: "Level-of-details", name: "Level-of-details", symmetric: false },
    { class: "Expansion", dual: "Substitution", name: "Substitution", symmetric: false },
    { class: "Expansion", name: "Restatement", symmetric: true },
    { class: "Expansion", dual: "Summary", name: "Summary", symmetric: false },
    { class: "Expansion", name: "Disjunction", symmetric: true },
    { class: "Expansion", dual: "Exception", name: "Exception", symmetric: false },
    { class: "Expansion", name: "Conjunction", symmetric: true },
    { class: "Expansion", dual: "Manner", name: "Manner", symmetric: false },
    { class: "Expansion", dual: "Process-step", name: "Process-step", symmetric: false },
    { class: "Expansion", dual: "Object-attribute", name: "Object-attribute", symmetric: false },
  ],
} satisfies Taxonomy;

export const LISTING = {
  dialogues: [
    { id: "classroom", n_units: 12, revision: 0 },
    { id: "overload", n_units: 5, revision: 0 },
  ],
} satisfies Listing;

export const CLASSROOM = {
  diagnostics: [],
  edges: [
    { labels: [{ kind: "dialog_act", tag: "Question/Info-request" }], source: 8, target: 8 },
    { labels: [{ kind: "dialog_act", tag: "Question/Info-request" }], source: 9, target: 9 },
    { labels: [{ kind: "dialog_act", tag: "Statement" }], source: 10, target: 10 },
    { labels: [{ kind: "dialog_act", tag: "Answer" }], source: 11, target: 9 },
    { labels: [{ kind: "dialog_act", tag: "Appreciation" }], source: 12, target: 11 },
    { labels: [{ kind: "continuation" }], source: 13, target: 10 },
    { labels: [{ kind: "rhetorical", orientation: "arg1", tag: "Expansion" }], source: 14, target: 13 },
    { labels: [{ kind: "dialog_act", tag: "Answer" }], source: 15, target: 8 },
    { labels: [{ kind: "dialog_act", tag: "Acknowledge" }], source: 16, target: 15 },
    { labels: [{ kind: "dialog_act", tag: "Question/Info-request" }], source: 17, target: 14 },
    { labels: [{ kind: "dialog_act", tag: "Answer" }], source: 18, target: 17 },
    { labels: [{ kind: "rhetorical", orientation: "arg1", tag: "Result" }], source: 19, target: 18 },
  ],
  id: "classroom",
  revision: 0,
  threads: [
    { id: 0, root: 8, unit_ids: [8, 15, 16] },
    { id: 1, root: 9, unit_ids: [9, 11, 12] },
    { id: 2, root: 10, unit_ids: [10, 13, 14, 17, 18, 19] },
  ],
  units: [
    { id: 8, speaker: "teacher", text: "Has everyone uploaded the draft reflection?" },
    { id: 9, speaker: "sam", text: "Which dataset are we using for the second exercise?" },
    { id: 10, speaker: "alex", text: "I found a bug in the starter notebook." },
    { id: 11, speaker: "jo", text: "The penguins one, same as last week." },
    { id: 12, speaker: "sam", text: "Great, thanks." },
    { id: 13, speaker: "alex", text: "The loader crashes when the cache folder is missing." },
    { id: 14, speaker: "alex", text: "You can reproduce it by deleting data/cache before running." },
    { id: 15, speaker: "jo", text: "Mine is uploaded already." },
    { id: 16, speaker: "teacher", text: "Thanks, I can see it now." },
    { id: 17, speaker: "teacher", text: "Does it still crash after you recreate the folder?" },
    { id: 18, speaker: "alex", text: "No, recreating the folder fixes it." },
    { id: 19, speaker: "jo", text: "So the fix is to guard the cache path in the loader." },
  ],
} satisfies DialogueBody;

export const OVERLOAD = {
  diagnostics: [],
  edges: [
    { labels: [{ kind: "dialog_act", tag: "Statement" }], source: 0, target: 0 },
    { labels: [{ kind: "dialog_act", tag: "Question/Info-request" }], source: 1, target: 1 },
    { labels: [{ kind: "continuation" }], source: 2, target: 0 },
    { labels: [{ kind: "dialog_act", tag: "Joke" }], source: 3, target: 2 },
    { labels: [{ kind: "dialog_act", tag: "Answer" }], source: 4, target: 1 },
    { labels: [{ kind: "rhetorical", tag: "Restatement" }], source: 4, target: 3 },
  ],
  id: "overload",
  revision: 0,
  threads: [{ id: 0, root: 0, unit_ids: [0, 1, 2, 3, 4] }],
  units: [
    { id: 0, speaker: "amy", text: "Our presentation slot got moved to Friday." },
    { id: 1, speaker: "ben", text: "Who is taking the demo section?" },
    { id: 2, speaker: "amy", text: "The room stays the same though." },
    { id: 3, speaker: "cal", text: "Knowing us, the demo will take itself." },
    { id: 4, speaker: "cal", text: "I am taking the demo, it runs itself anyway." },
  ],
} satisfies DialogueBody;

export const RAGGED = {
  diagnostics: [
    {
      code: "MissingContext",
      dialogue_id: "ragged",
      message: "unit 3 has no dependency; mark a response or a thread start",
      severity: "warning",
      unit_id: 3,
    },
  ],
  edges: [
    { labels: [{ kind: "dialog_act", tag: "Statement" }], source: 0, target: 0 },
    { labels: [{ kind: "dialog_act", tag: "Question/Info-request" }], source: 1, target: 1 },
    { labels: [{ kind: "dialog_act", tag: "Answer" }], source: 2, target: 1 },
  ],
  id: "ragged",
  revision: 0,
  threads: [
    { id: 0, root: 0, unit_ids: [0] },
    { id: 1, root: 1, unit_ids: [1, 2] },
    { id: 2, root: 3, unit_ids: [3] },
  ],
  units: [
    { id: 0, speaker: "amy", text: "Kickoff notes are in the shared folder." },
    { id: 1, speaker: "ben", text: "Did anyone book the demo room?" },
    { id: 2, speaker: "cal", text: "Booked it for three, same wing as before." },
    { id: 3, speaker: "ben", text: "Perfect, that works." },
  ],
} satisfies DialogueBody;

export function deepCopy<T>(value: T): T {
  return JSON.parse(JSON.stringify(value)) as T;
}
