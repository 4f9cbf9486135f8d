#!/usr/bin/env python3
# Copyright 2026 The Monotree Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Builds the bundled corpora under data/.

mini_corpus.jsonl: 54 annotated word problems (3 folds x 18) covering all six
pair labels, with distractor quantities in every fold.

constraint_corpus.jsonl: 20 two-quantity problems used to exercise the
positivity and integrality constraints during inference.

The output is deterministic; rerunning the script reproduces the same bytes.
"""

import json
import pathlib
from fractions import Fraction

OUT_DIR = pathlib.Path(__file__).resolve().parent.parent / "data"


def tok(text, pos, chunk, head, deprel, lemma=None):
    t = {"text": text, "pos": pos, "chunk": chunk, "head": head, "deprel": deprel}
    if lemma:
        t["lemma"] = lemma
    return t


# --- Sentence shapes -------------------------------------------------------
# Heads are sentence-relative indices (-1 for the root) and get offset when a
# problem is assembled.


def s_svo(name, verb, lemma, num, unit):
    """"<Name> <verb> <num> <unit> ." """
    return [
        tok(name, "NNP", "B-NP", 1, "nsubj"),
        tok(verb, "VBD", "B-VP", -1, "root", lemma),
        tok(num, "CD", "B-NP", 3, "num"),
        tok(unit, "NNS", "I-NP", 1, "dobj"),
        tok(".", ".", "O", 1, "punct"),
    ]


def s_svo_present(subj_det, subj_noun, verb, lemma, num, unit):
    """"The <noun> <verb> <num> <unit> ." """
    return [
        tok(subj_det, "DT", "B-NP", 1, "det"),
        tok(subj_noun, "NN", "I-NP", 2, "nsubj"),
        tok(verb, "VBZ", "B-VP", -1, "root", lemma),
        tok(num, "CD", "B-NP", 4, "num"),
        tok(unit, "NNS", "I-NP", 2, "dobj"),
        tok(".", ".", "O", 2, "punct"),
    ]


def s_pronoun_svo(pron, verb, lemma, num, unit):
    """"It <verb> <num> <unit> ." """
    return [
        tok(pron, "PRP", "B-NP", 1, "nsubj"),
        tok(verb, "VBZ", "B-VP", -1, "root", lemma),
        tok(num, "CD", "B-NP", 3, "num"),
        tok(unit, "NNS", "I-NP", 1, "dobj"),
        tok(".", ".", "O", 1, "punct"),
    ]


def s_gain_more(name, verb, lemma, num, unit):
    """"<Name> <verb> <num> more <unit> ." """
    return [
        tok(name, "NNP", "B-NP", 1, "nsubj"),
        tok(verb, "VBZ" if verb.endswith("s") else "VBD", "B-VP", -1, "root", lemma),
        tok(num, "CD", "B-NP", 4, "num"),
        tok("more", "JJR", "I-NP", 4, "amod"),
        tok(unit, "NNS", "I-NP", 1, "dobj"),
        tok(".", ".", "O", 1, "punct"),
    ]


def s_give_to(name, verb, lemma, num, unit, other):
    """"<Name> <verb> <num> <unit> to <Other> ." """
    return [
        tok(name, "NNP", "B-NP", 1, "nsubj"),
        tok(verb, "VBD", "B-VP", -1, "root", lemma),
        tok(num, "CD", "B-NP", 3, "num"),
        tok(unit, "NNS", "I-NP", 1, "dobj"),
        tok("to", "IN", "B-PP", 1, "prep"),
        tok(other, "NNP", "B-NP", 4, "pobj"),
        tok(".", ".", "O", 1, "punct"),
    ]


def s_has_now(name, num, unit):
    """"<Name> has <num> <unit> now ." """
    return [
        tok(name, "NNP", "B-NP", 1, "nsubj"),
        tok("has", "VBZ", "B-VP", -1, "root", "have"),
        tok(num, "CD", "B-NP", 3, "num"),
        tok(unit, "NNS", "I-NP", 1, "dobj"),
        tok("now", "RB", "B-ADVP", 1, "advmod"),
        tok(".", ".", "O", 1, "punct"),
    ]


def s_each_of(big_unit, verb, lemma, num, small_unit):
    """"Each of the <big> <verb> <num> <small> ." """
    return [
        tok("Each", "DT", "B-NP", 4, "nsubj"),
        tok("of", "IN", "B-PP", 0, "prep"),
        tok("the", "DT", "B-NP", 3, "det"),
        tok(big_unit, "NNS", "I-NP", 1, "pobj"),
        tok(verb, "VBZ", "B-VP", -1, "root", lemma),
        tok(num, "CD", "B-NP", 6, "num"),
        tok(small_unit, "NNS", "I-NP", 4, "dobj"),
        tok(".", ".", "O", 4, "punct"),
    ]


def s_keep_in(name, verb, lemma, num, unit, loc):
    """"<Name> <verb> <num> <unit> in a <loc> ." """
    return [
        tok(name, "NNP", "B-NP", 1, "nsubj"),
        tok(verb, "VBD", "B-VP", -1, "root", lemma),
        tok(num, "CD", "B-NP", 3, "num"),
        tok(unit, "NNS", "I-NP", 1, "dobj"),
        tok("in", "IN", "B-PP", 1, "prep"),
        tok("a", "DT", "B-NP", 6, "det"),
        tok(loc, "NN", "I-NP", 4, "pobj"),
        tok(".", ".", "O", 1, "punct"),
    ]


def s_put_in_the(name, verb, lemma, num, unit, loc):
    """"<Name> <verb> <num> <unit> in the <loc> ." """
    out = s_keep_in(name, verb, lemma, num, unit, loc)
    out[1]["pos"] = "VBZ"
    out[5] = tok("the", "DT", "B-NP", 6, "det")
    return out


def s_split_rest(name, num, unit):
    """"<Name> split the rest equally among <num> <unit> ." """
    return [
        tok(name, "NNP", "B-NP", 1, "nsubj"),
        tok("split", "VBD", "B-VP", -1, "root", "split"),
        tok("the", "DT", "B-NP", 3, "det"),
        tok("rest", "NN", "I-NP", 1, "dobj"),
        tok("equally", "RB", "B-ADVP", 1, "advmod"),
        tok("among", "IN", "B-PP", 1, "prep"),
        tok(num, "CD", "B-NP", 7, "num"),
        tok(unit, "NNS", "I-NP", 5, "pobj"),
        tok(".", ".", "O", 1, "punct"),
    ]


def s_share_among(name, verb, lemma, num1, unit1, num2, unit2):
    """"<Name> <verb> <num1> <unit1> equally among <num2> <unit2> ." """
    return [
        tok(name, "NNP", "B-NP", 1, "nsubj"),
        tok(verb, "VBD", "B-VP", -1, "root", lemma),
        tok(num1, "CD", "B-NP", 3, "num"),
        tok(unit1, "NNS", "I-NP", 1, "dobj"),
        tok("equally", "RB", "B-ADVP", 1, "advmod"),
        tok("among", "IN", "B-PP", 1, "prep"),
        tok(num2, "CD", "B-NP", 7, "num"),
        tok(unit2, "NNS", "I-NP", 5, "pobj"),
        tok(".", ".", "O", 1, "punct"),
    ]


def s_pack_with(name, verb, lemma, num1, unit1, num2, unit2):
    """"<Name> <verb> <num1> <unit1> with <num2> <unit2> ." """
    return [
        tok(name, "NNP", "B-NP", 1, "nsubj"),
        tok(verb, "VBZ", "B-VP", -1, "root", lemma),
        tok(num1, "CD", "B-NP", 3, "num"),
        tok(unit1, "NNS", "I-NP", 1, "dobj"),
        tok("with", "IN", "B-PP", 1, "prep"),
        tok(num2, "CD", "B-NP", 6, "num"),
        tok(unit2, "NNS", "I-NP", 4, "pobj"),
        tok(".", ".", "O", 1, "punct"),
    ]


def s_picked_three(name, n1, u1, n2, u2, n3, u3):
    """"<Name> picked <n1> <u1> , <n2> <u2> , and <n3> <u3> ." """
    return [
        tok(name, "NNP", "B-NP", 1, "nsubj"),
        tok("picked", "VBD", "B-VP", -1, "root", "pick"),
        tok(n1, "CD", "B-NP", 3, "num"),
        tok(u1, "NNS", "I-NP", 1, "dobj"),
        tok(",", ",", "O", 3, "punct"),
        tok(n2, "CD", "B-NP", 6, "num"),
        tok(u2, "NNS", "I-NP", 3, "conj"),
        tok(",", ",", "O", 3, "punct"),
        tok("and", "CC", "O", 3, "cc"),
        tok(n3, "CD", "B-NP", 10, "num"),
        tok(u3, "NNS", "I-NP", 3, "conj"),
        tok(".", ".", "O", 1, "punct"),
    ]


def s_there_are(num, unit, loc1, loc2):
    """"There are <num> <unit> in a <loc1> on the <loc2> ." """
    return [
        tok("There", "EX", "B-NP", 1, "expl"),
        tok("are", "VBP", "B-VP", -1, "root", "be"),
        tok(num, "CD", "B-NP", 3, "num"),
        tok(unit, "NNS", "I-NP", 1, "nsubj"),
        tok("in", "IN", "B-PP", 1, "prep"),
        tok("a", "DT", "B-NP", 6, "det"),
        tok(loc1, "NN", "I-NP", 4, "pobj"),
        tok("on", "IN", "B-PP", 6, "prep"),
        tok("the", "DT", "B-NP", 9, "det"),
        tok(loc2, "NN", "I-NP", 7, "pobj"),
        tok(".", ".", "O", 1, "punct"),
    ]


def s_two_clause(n1, v1, l1, num1, unit, loc1, n2, v2, l2, num2, loc2):
    """"<N1> <v1> <num1> <unit> on a <loc1> , and <N2> <v2> <num2> <unit> by the <loc2> ." """
    return [
        tok(n1, "NNP", "B-NP", 1, "nsubj"),
        tok(v1, "VBZ", "B-VP", -1, "root", l1),
        tok(num1, "CD", "B-NP", 3, "num"),
        tok(unit, "NNS", "I-NP", 1, "dobj"),
        tok("on", "IN", "B-PP", 1, "prep"),
        tok("a", "DT", "B-NP", 6, "det"),
        tok(loc1, "NN", "I-NP", 4, "pobj"),
        tok(",", ",", "O", 1, "punct"),
        tok("and", "CC", "O", 1, "cc"),
        tok(n2, "NNP", "B-NP", 10, "nsubj"),
        tok(v2, "VBZ", "B-VP", 1, "conj", l2),
        tok(num2, "CD", "B-NP", 12, "num"),
        tok(unit, "NNS", "I-NP", 10, "dobj"),
        tok("by", "IN", "B-PP", 10, "prep"),
        tok("the", "DT", "B-NP", 15, "det"),
        tok(loc2, "NN", "I-NP", 13, "pobj"),
        tok(".", ".", "O", 1, "punct"),
    ]


def q_have(unit, name, tail):
    """"How many <unit> does <name> have <tail> ?" with tail "now" or "left"."""
    return [
        tok("How", "WRB", "B-NP", 1, "advmod"),
        tok("many", "JJ", "I-NP", 2, "amod"),
        tok(unit, "NNS", "I-NP", 5, "dobj"),
        tok("does", "VBZ", "B-VP", 5, "aux"),
        tok(name, "NNP", "B-NP", 5, "nsubj"),
        tok("have", "VB", "B-VP", -1, "root", "have"),
        tok(tail, "RB", "B-ADVP", 5, "advmod"),
        tok("?", ".", "O", 5, "punct"),
    ]


def q_did(unit, name, verb, lemma):
    """"How many <unit> did <name> <verb> ?" """
    return [
        tok("How", "WRB", "B-NP", 1, "advmod"),
        tok("many", "JJ", "I-NP", 2, "amod"),
        tok(unit, "NNS", "I-NP", 5, "dobj"),
        tok("did", "VBD", "B-VP", 5, "aux"),
        tok(name, "NNP", "B-NP", 5, "nsubj"),
        tok(verb, "VB", "B-VP", -1, "root", lemma),
        tok("?", ".", "O", 5, "punct"),
    ]


def q_hold(small_unit, big_unit, loc=None):
    """"How many <small> do the <big> [in the <loc>] hold ?" """
    out = [
        tok("How", "WRB", "B-NP", 1, "advmod"),
        tok("many", "JJ", "I-NP", 2, "amod"),
        tok(small_unit, "NNS", "I-NP", None, "dobj"),
        tok("do", "VBP", "B-VP", None, "aux"),
        tok("the", "DT", "B-NP", 5, "det"),
        tok(big_unit, "NNS", "I-NP", None, "nsubj"),
    ]
    if loc:
        out += [
            tok("in", "IN", "B-PP", 5, "prep"),
            tok("the", "DT", "B-NP", 8, "det"),
            tok(loc, "NN", "I-NP", 6, "pobj"),
        ]
    root = len(out)
    out += [tok("hold", "VB", "B-VP", -1, "root", "hold"),
            tok("?", ".", "O", root, "punct")]
    for i in (2, 3, 5):
        out[i]["head"] = root
    return out


def q_get_each(unit1, unit2):
    """"How many <unit1> did each of the <unit2> get ?" """
    return [
        tok("How", "WRB", "B-NP", 1, "advmod"),
        tok("many", "JJ", "I-NP", 2, "amod"),
        tok(unit1, "NNS", "I-NP", 8, "dobj"),
        tok("did", "VBD", "B-VP", 8, "aux"),
        tok("each", "DT", "B-NP", 8, "nsubj"),
        tok("of", "IN", "B-PP", 4, "prep"),
        tok("the", "DT", "B-NP", 7, "det"),
        tok(unit2, "NNS", "I-NP", 5, "pobj"),
        tok("get", "VB", "B-VP", -1, "root", "get"),
        tok("?", ".", "O", 8, "punct"),
    ]


def q_go_each(unit1, unit2, verb="go", lemma="go", pos="VBP"):
    """"How many <unit1> <verb> into each of the <unit2> ?" """
    return [
        tok("How", "WRB", "B-NP", 1, "advmod"),
        tok("many", "JJ", "I-NP", 2, "amod"),
        tok(unit1, "NNS", "I-NP", 3, "nsubj"),
        tok(verb, pos, "B-VP", -1, "root", lemma),
        tok("into", "IN", "B-PP", 3, "prep"),
        tok("each", "DT", "B-NP", 4, "pobj"),
        tok("of", "IN", "B-PP", 5, "prep"),
        tok("the", "DT", "B-NP", 8, "det"),
        tok(unit2, "NNS", "I-NP", 6, "pobj"),
        tok("?", ".", "O", 3, "punct"),
    ]


def q_are_in(unit, loc):
    """"How many <unit> are in the <loc> ?" """
    return [
        tok("How", "WRB", "B-NP", 1, "advmod"),
        tok("many", "JJ", "I-NP", 2, "amod"),
        tok(unit, "NNS", "I-NP", 3, "nsubj"),
        tok("are", "VBP", "B-VP", -1, "root", "be"),
        tok("in", "IN", "B-PP", 3, "prep"),
        tok("the", "DT", "B-NP", 6, "det"),
        tok(loc, "NN", "I-NP", 4, "pobj"),
        tok("?", ".", "O", 3, "punct"),
    ]


def q_more_than(unit, name2, name1):
    """"How many more <unit> did <name2> have than <name1> ?" """
    return [
        tok("How", "WRB", "B-NP", 1, "advmod"),
        tok("many", "JJ", "I-NP", 3, "amod"),
        tok("more", "JJR", "I-NP", 3, "amod"),
        tok(unit, "NNS", "I-NP", 6, "dobj"),
        tok("did", "VBD", "B-VP", 6, "aux"),
        tok(name2, "NNP", "B-NP", 6, "nsubj"),
        tok("have", "VB", "B-VP", -1, "root", "have"),
        tok("than", "IN", "B-PP", 6, "prep"),
        tok(name1, "NNP", "B-NP", 7, "pobj"),
        tok("?", ".", "O", 6, "punct"),
    ]


def q_in_all(unit):
    """"How many <unit> did they see in all ?" """
    return [
        tok("How", "WRB", "B-NP", 1, "advmod"),
        tok("many", "JJ", "I-NP", 2, "amod"),
        tok(unit, "NNS", "I-NP", 5, "dobj"),
        tok("did", "VBD", "B-VP", 5, "aux"),
        tok("they", "PRP", "B-NP", 5, "nsubj"),
        tok("see", "VB", "B-VP", -1, "root", "see"),
        tok("in", "IN", "B-PP", 5, "prep"),
        tok("all", "DT", "B-NP", 6, "pobj"),
        tok("?", ".", "O", 5, "punct"),
    ]


# --- Assembly --------------------------------------------------------------


def evaluate_prefix(expr, values):
    pos = 0

    def parse():
        nonlocal pos
        if expr[pos] == "(":
            pos += 1
            op = expr[pos]
            pos += 2
            left = parse()
            pos += 1
            right = parse()
            pos += 1  # ")"
            return {"+": left + right, "-": left - right,
                    "*": left * right, "/": left / right}[op]
        start = pos
        while pos < len(expr) and expr[pos] not in " )":
            pos += 1
        return values[int(expr[start + 1:pos])]

    return parse()


def problem(pid, fold, sentences, gold, answer):
    tokens = []
    quantities = []
    for sid, sent in enumerate(sentences):
        offset = len(tokens)
        for rel, t in enumerate(sent):
            head = t["head"]
            assert head == -1 or 0 <= head < len(sent), (pid, sid, rel)
            full = dict(t)
            full["head"] = -1 if head == -1 else head + offset
            full["sentence_id"] = sid
            tokens.append(full)
            if full["text"][0].isdigit():
                quantities.append(
                    {"index": len(quantities), "value": full["text"], "token": offset + rel})
    values = [Fraction(q["value"]) for q in quantities]
    got = evaluate_prefix(gold, values)
    assert got == Fraction(answer), (pid, gold, str(got), answer)
    return {
        "id": pid,
        "fold": fold,
        "text": " ".join(t["text"] for t in tokens),
        "tokens": tokens,
        "quantities": quantities,
        "answer": str(answer),
        "gold_tree": gold,
    }


def mini_corpus():
    problems = []

    # Two-quantity addition: "had" then "found/bought more".
    t1 = [
        ("Maria", "marbles", 28, 19, "found", "find"),
        ("Omar", "stamps", 32, 9, "bought", "buy"),
        ("Lena", "shells", 21, 14, "found", "find"),
        ("Carla", "coins", 17, 25, "bought", "buy"),
        ("Ravi", "cards", 40, 13, "found", "find"),
        ("Iris", "beads", 12, 30, "bought", "buy"),
    ]
    for k, (name, unit, a, b, verb, lemma) in enumerate(t1):
        problems.append(problem(
            f"mini-{k % 3}-t1{'ab'[k // 3]}", k % 3,
            [s_svo(name, "had", "have", str(a), unit),
             s_gain_more(name, verb, lemma, str(b), unit),
             q_have(unit, name, "now")],
            "(+ q0 q1)", a + b))

    # Two-quantity subtraction: "had" then "gave/lost".
    t2 = [
        ("Tom", "marbles", 18, 7, "gave", "give", "Dan"),
        ("Nora", "peaches", 22, 8, "lost", "lose", "Kim"),
        ("Elio", "stickers", 26, 9, "gave", "give", "Mia"),
        ("June", "grapes", 19, 6, "lost", "lose", "Ben"),
        ("Sara", "pebbles", 35, 12, "gave", "give", "Leo"),
        ("Igor", "buttons", 31, 15, "lost", "lose", "Ada"),
    ]
    for k, (name, unit, a, b, verb, lemma, other) in enumerate(t2):
        sent2 = (s_give_to(name, verb, lemma, str(b), unit, other)
                 if verb == "gave" else s_svo(name, verb, lemma, str(b), unit))
        problems.append(problem(
            f"mini-{k % 3}-t2{'ab'[k // 3]}", k % 3,
            [s_svo(name, "had", "have", str(a), unit), sent2,
             q_have(unit, name, "left")],
            "(- q0 q1)", a - b))

    # Reversed subtraction: "had" then "has ... now"; the gain is asked for.
    t3 = [
        ("Connie", "marbles", 74, 86),
        ("Pavel", "tokens", 63, 92),
        ("Dina", "ribbons", 45, 58),
        ("Musa", "acorns", 16, 44),
        ("Vera", "pennies", 29, 41),
        ("Theo", "crayons", 57, 85),
    ]
    for k, (name, unit, a, b) in enumerate(t3):
        problems.append(problem(
            f"mini-{k % 3}-t3{'ab'[k // 3]}", k % 3,
            [s_svo(name, "had", "have", str(a), unit),
             s_has_now(name, str(b), unit),
             q_did(unit, name, "get", "get")],
            "(- q1 q0)", b - a))

    # Rate times count: "each of the <big> holds <n> <small>".
    t4 = [
        ("Tara", "boxes", "pencils", 4, 3),
        ("Remy", "jugs", "cups", 6, 8),
        ("Wenda", "packs", "straws", 5, 6),
        ("Abel", "cartons", "bottles", 9, 3),
        ("Lars", "folders", "sheets", 7, 4),
        ("Suki", "tins", "biscuits", 8, 5),
    ]
    for k, (name, big, small, rate, count) in enumerate(t4):
        problems.append(problem(
            f"mini-{k % 3}-t4{'ab'[k // 3]}", k % 3,
            [s_each_of(big, "holds", "hold", str(rate), small),
             s_svo(name, "owned", "own", str(count), big),
             q_hold(small, big)],
            "(* q0 q1)", rate * count))

    # Division: share a total equally, ask per recipient.
    t5 = [
        ("Mia", "cookies", "friends", 24, 6),
        ("Jon", "apples", "baskets", 45, 5),
        ("Rosa", "candies", "cousins", 36, 4),
        ("Kofi", "berries", "bowls", 30, 6),
        ("Elsa", "plums", "plates", 28, 7),
        ("Hugo", "nuts", "jars", 32, 8),
    ]
    for k, (name, unit1, unit2, total, parts) in enumerate(t5):
        problems.append(problem(
            f"mini-{k % 3}-t5{'ab'[k // 3]}", k % 3,
            [s_share_among(name, "shared", "share", str(total), unit1, str(parts), unit2),
             q_get_each(unit1, unit2)],
            "(/ q0 q1)", total // parts))

    # Reversed division: the count precedes the total.
    t6 = [
        ("Rick", "boxes", "muffins", 6, 42),
        ("Lola", "bags", "apricots", 4, 36),
        ("Ivan", "crates", "melons", 5, 30),
        ("Ruth", "sacks", "turnips", 3, 27),
        ("Marc", "bins", "lemons", 7, 56),
        ("Aida", "cases", "pears", 8, 48),
    ]
    for k, (name, unit1, unit2, parts, total) in enumerate(t6):
        problems.append(problem(
            f"mini-{k % 3}-t6{'ab'[k // 3]}", k % 3,
            [s_pack_with(name, "packs", "pack", str(parts), unit1, str(total), unit2),
             q_go_each(unit2, unit1)],
            "(/ q1 q0)", total // parts))

    # Rate with a distractor: (held + bought) x per-container rate.
    t7 = [
        ("Maya", "crates", "jars", "pantry", "shelves", 9, 2, 3, 5),
        ("Noor", "boxes", "cans", "cellar", "hooks", 6, 4, 5, 3),
        ("Eli", "racks", "cups", "shed", "stools", 7, 3, 4, 2),
        ("Faye", "bins", "balls", "closet", "rails", 8, 5, 2, 4),
        ("Gus", "trays", "eggs", "larder", "stands", 5, 6, 3, 7),
        ("Hana", "sacks", "bulbs", "garage", "carts", 4, 2, 6, 5),
    ]
    for k, (name, big, small, loc, dist, rate, dcount, held, extra) in enumerate(t7):
        problems.append(problem(
            f"mini-{k % 3}-t7{'ab'[k // 3]}", k % 3,
            [s_each_of(big, "holds", "hold", str(rate), small),
             s_svo_present("The", loc, "has", "have", str(dcount), dist),
             s_pronoun_svo("It", "holds", "hold", str(held), big),
             s_gain_more(name, "buys", "buy", str(extra), big),
             q_hold(small, big, loc)],
            "(* (+ q2 q3) q0)", (held + extra) * rate))

    # Three-way addition under one verb mention.
    t9 = [
        ("Rosa", ("apples", 5), ("pears", 8), ("plums", 3)),
        ("Finn", ("limes", 7), ("figs", 2), ("dates", 6)),
        ("Jade", ("beets", 4), ("leeks", 9), ("herbs", 5)),
    ]
    for k, (name, (u1, n1), (u2, n2), (u3, n3)) in enumerate(t9):
        problems.append(problem(
            f"mini-{k}-t9", k,
            [s_picked_three(name, str(n1), u1, str(n2), u2, str(n3), u3),
             q_did("fruits", name, "pick", "pick")],
            "(+ (+ q0 q1) q2)", n1 + n2 + n3))

    # Add then subtract over three quantities.
    t10 = [
        ("Leo", "pencils", "Ann", 14, 9, 6),
        ("Mona", "erasers", "Raj", 25, 8, 13),
        ("Zane", "magnets", "Uma", 30, 16, 7),
    ]
    for k, (name, unit, other, a, b, c) in enumerate(t10):
        problems.append(problem(
            f"mini-{k}-t10", k,
            [s_svo(name, "had", "have", str(a), unit),
             s_gain_more(name, "bought", "buy", str(b), unit),
             s_give_to(name, "gave", "give", str(c), unit, other),
             q_have(unit, name, "now")],
            "(- (+ q0 q1) q2)", a + b - c))

    # Subtract then divide over three quantities.
    t11 = [
        ("Nina", "stickers", "albums", 50, 10, 8),
        ("Omar", "photos", "frames", 60, 12, 6),
        ("Lucy", "stamps", "folders", 44, 12, 8),
    ]
    for k, (name, unit, parts_unit, a, b, c) in enumerate(t11):
        problems.append(problem(
            f"mini-{k}-t11", k,
            [s_svo(name, "had", "have", str(a), unit),
             s_keep_in(name, "kept", "keep", str(b), unit, "box"),
             s_split_rest(name, str(c), parts_unit),
             q_go_each(unit, parts_unit, "went", "go", "VBD")],
            "(/ (- q0 q1) q2)", (a - b) // c))

    # Same-unit distractors told apart only by their related noun phrases.
    te3 = [
        ("oranges", "basket", "table", "shelf", "window",
         "Dana", "Rob", "Avery", 8, 11, 4, 5),
        ("lemons", "bowl", "counter", "bench", "door",
         "Kira", "Seth", "Noel", 9, 12, 6, 4),
        ("apples", "crate", "porch", "ledge", "fence",
         "Tess", "Juan", "Remi", 7, 10, 3, 6),
    ]
    for k, (unit, loc1, loc2, loca, locb, n1, n2, n3, a, d1, d2, b) in enumerate(te3):
        problems.append(problem(
            f"mini-{k}-te3", k,
            [s_there_are(str(a), unit, loc1, loc2),
             s_two_clause(n1, "sets", "set", str(d1), unit, loca,
                          n2, "piles", "pile", str(d2), locb),
             s_put_in_the(n3, "puts", "put", str(b), unit, loc1),
             q_are_in(unit, loc1)],
            "(+ q0 q3)", a + b))

    problems.sort(key=lambda p: (p["fold"], p["id"]))
    return problems


def constraint_corpus():
    problems = []
    positivity = [
        ("Jo", "Mel", "pins", 5, 9), ("Abe", "Ned", "caps", 3, 8),
        ("Ivy", "Sal", "keys", 2, 7), ("Ora", "Tim", "bats", 4, 9),
        ("Ula", "Vic", "rings", 1, 6), ("Amy", "Bob", "forks", 8, 13),
        ("Cal", "Dee", "mugs", 6, 14), ("Eva", "Fox", "pads", 7, 16),
        ("Gil", "Hal", "rods", 9, 20), ("Ida", "Jai", "cones", 11, 25),
    ]
    for k, (n1, n2, unit, a, b) in enumerate(positivity):
        problems.append(problem(
            f"pos-{k}", k % 2,
            [s_svo(n1, "had", "have", str(a), unit),
             s_svo(n2, "had", "have", str(b), unit),
             q_more_than(unit, n2, n1)],
            "(- q1 q0)", b - a))
    integrality = [
        ("Al", "Bo", "cars", 7, 2), ("Cy", "Di", "vans", 9, 4),
        ("Ed", "Flo", "kites", 5, 3), ("Gus", "Hope", "boats", 11, 2),
        ("Ian", "Joy", "trucks", 7, 4), ("Kay", "Lev", "trains", 13, 3),
        ("Max", "Nia", "planes", 8, 3), ("Oli", "Pam", "sleds", 9, 2),
        ("Quin", "Rae", "carts", 5, 2), ("Sol", "Tia", "bikes", 7, 3),
    ]
    for k, (n1, n2, unit, a, b) in enumerate(integrality):
        problems.append(problem(
            f"int-{k}", k % 2,
            [s_svo(n1, "saw", "see", str(a), unit),
             s_svo(n2, "saw", "see", str(b), unit),
             q_in_all(unit)],
            "(+ q0 q1)", a + b))
    return problems


def write(path, problems):
    with open(path, "w") as out:
        for p in problems:
            out.write(json.dumps(p) + "\n")
    print(f"wrote {len(problems)} problems to {path}")


def main():
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    write(OUT_DIR / "mini_corpus.jsonl", mini_corpus())
    write(OUT_DIR / "constraint_corpus.jsonl", constraint_corpus())


if __name__ == "__main__":
    main()
