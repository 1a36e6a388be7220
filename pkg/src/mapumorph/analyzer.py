"""Segmentation of surface verb forms into glossed analyses, and the
inverse: generation of surface forms from a root and suffix ids.

The analyser searches the space of underlying morph sequences whose
realization equals the input word.  The search is exhaustive with
dead-state memoisation (verb forms are short, so completeness beats
pruning) and every complete path is filtered through the morphotactic
validator; only zero-violation sequences survive.  Ambiguity is
deliberately preserved: labile roots contribute one analysis per sense
row, and homophonous suffixes one per reading.

Analyses are ranked by piece count, then lexicographically by morph ids;
the ranking is a plumbing choice, not a linguistic claim.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from . import alphabet, tags
from .lexicon import Lexicon, RootEntry, SuffixEntry
from .morphotactics import (RootUse, compound_valency, plan_trace,
                            validate_plan, validate_sequence)
from .phonology import (Piece, RuleTable, extend_realization,
                        new_realization, select_allomorph)


class GenerationError(ValueError):
    """Raised when generation input fails validation or realization."""

    def __init__(self, message, violations=()):
        self.violations = tuple(violations)
        if self.violations:
            message = f"{message}: " + "; ".join(
                f"{v.code}@{v.at}" for v in self.violations)
        super().__init__(message)


@dataclass(frozen=True)
class AnalysisPiece:
    start: int
    end: int
    kind: str                 # "root" or "suffix"
    morph: str                # root form or suffix id
    surface: str
    tags: tuple[str, ...]
    gloss: str | None = None
    category: str | None = None
    sense_context: str | None = None
    effect: str | None = None
    slot: int | None = None
    fused_with_prev: bool = False

    def to_json(self) -> dict:
        return {
            "span": [self.start, self.end], "kind": self.kind,
            "morph": self.morph, "surface": self.surface,
            "tags": list(self.tags), "gloss": self.gloss,
            "category": self.category, "sense_context": self.sense_context,
            "effect": self.effect, "slot": self.slot,
            "fused_with_prev": self.fused_with_prev,
        }


@dataclass(frozen=True)
class Analysis:
    word: str
    pieces: tuple[AnalysisPiece, ...]
    trace: tuple[tuple[str, str], ...]
    stem_valency: str | None = None   # compound stem label, when ≥2 members
    source: str | None = None

    def key(self) -> tuple:
        out = []
        for p in self.pieces:
            if p.kind == "root":
                out.append(("R", p.morph, p.sense_context, p.gloss))
            else:
                out.append(("S", p.morph))
        return tuple(out)

    @property
    def score(self) -> tuple:
        return (len(self.pieces), self.key())

    @property
    def root_pieces(self) -> tuple[AnalysisPiece, ...]:
        return tuple(p for p in self.pieces if p.kind == "root")

    @property
    def suffix_ids(self) -> tuple[str, ...]:
        return tuple(p.morph for p in self.pieces if p.kind == "suffix")

    def matches(self, root_form: str, sense_context: str,
                suffix_ids) -> bool:
        roots = self.root_pieces
        return (len(roots) == 1 and roots[0].morph == root_form
                and roots[0].sense_context == sense_context
                and self.suffix_ids == tuple(suffix_ids))

    def to_json(self) -> dict:
        return {
            "word": self.word,
            "gloss": gloss_render(self),
            "pieces": [p.to_json() for p in self.pieces],
            "trace": [list(step) for step in self.trace],
            "stem_valency": self.stem_valency,
            "source": self.source,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json(), ensure_ascii=False, sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> "Analysis":
        pieces = tuple(
            AnalysisPiece(p["span"][0], p["span"][1], p["kind"], p["morph"],
                          p.get("surface", ""), tuple(p.get("tags", ())),
                          p.get("gloss"), p.get("category"),
                          p.get("sense_context"), p.get("effect"),
                          p.get("slot"), p.get("fused_with_prev", False))
            for p in data["pieces"])
        trace = tuple((m, s) for m, s in data.get("trace", ()))
        return cls(data["word"], pieces, trace, data.get("stem_valency"),
                   data.get("source"))


def surface_licensing_ok(shaped: list[tuple[tuple[str, ...], str]]) -> bool:
    """Surface-level licensing shared by the analyser and test oracles.

    ``shaped`` is a list of (tags, surface) pairs.  The zero-surface
    indicative is licensed only in its two attested environments: fused
    into a preceding third-person-patient marker, or in the first-person
    plural ending (zero first person followed by iñ).
    """
    for i, (piece_tags, surface) in enumerate(shaped):
        if "IND" in piece_tags and surface == "":
            prev_ok = i > 0 and "3P" in shaped[i - 1][0]
            nxt = shaped[i + 1] if i + 1 < len(shaped) else ((), None)
            nxt2 = shaped[i + 2] if i + 2 < len(shaped) else ((), None)
            plural_ok = ("1" in nxt[0] and nxt[1] == ""
                         and "PL" in nxt2[0] and nxt2[1] == "iñ")
            if not (prev_ok or plural_ok):
                return False
    return True


def _defaults(lexicon, rules):
    if lexicon is None:
        from .defaults import default_lexicon
        lexicon = default_lexicon()
    if rules is None:
        from .defaults import default_rules
        rules = default_rules()
    return lexicon, rules


class _Searcher:
    """Depth-first enumeration of morph paths matching the word."""

    def __init__(self, word: str, lexicon: Lexicon, rules: RuleTable):
        self.word = word
        self.lexicon = lexicon
        self.rules = rules
        self.suffixes = sorted(lexicon.suffixes.values(), key=lambda s: s.id)
        self.roots = lexicon.iter_roots()
        # allomorph surfaces usable after a vowel / consonant, per suffix
        self.allomorphs = {
            kind: {s.id: [a.surface for a in s.allomorphs if a.matches(kind)]
                   for s in self.suffixes}
            for kind in ("V", "C")}
        self.results: list[tuple[list[Piece], list[str]]] = []
        self.dead: set = set()

    def run(self):
        for entry in self.roots:
            # boundary rules never touch a piece's first character, so
            # that is the only safe prefix probe before realization
            if entry.form and entry.form[0] == self.word[0]:
                state = extend_realization(
                    new_realization(),
                    Piece(entry.form, "root", category=entry.category),
                    self.rules, self.lexicon)
                self._step(state, 0, 37, 1, True)
        return self.results

    def _step(self, state, pos, floor, n_members, member_ok):
        last = state.pieces[-1]
        key = (pos, state.parts[-1], last.suffix_id or last.form,
               last.category, floor, n_members, member_ok)
        if key in self.dead:
            return
        produced = len(self.results)

        if self.word[pos:] == state.parts[-1]:
            self.results.append((list(state.pieces), list(state.parts)))

        kind = alphabet.final_kind(state.surface)
        for entry in self.suffixes:
            if entry.slot >= floor:
                continue
            next_floor = 3 if entry.tag == "IND1SG" else entry.slot
            for surface in self.allomorphs[kind][entry.id]:
                piece = Piece(surface, "suffix", suffix_id=entry.id)
                self._extend(state, pos, piece, next_floor, n_members,
                             member_ok and entry.slot >= 33)

        if member_ok and n_members < 3:
            for entry in self.roots:
                if not entry.form:
                    continue
                piece = Piece(entry.form, "root", category=entry.category)
                self._extend(state, pos, piece, 37, n_members + 1, True)

        if len(self.results) == produced:
            self.dead.add(key)

    def _extend(self, state, pos, piece, floor, n_members, member_ok):
        new_state = extend_realization(state, piece, self.rules, self.lexicon)
        finalized = new_state.parts[-2]
        if not self.word.startswith(finalized, pos):
            return
        new_pos = pos + len(finalized)
        pending = new_state.parts[-1]
        # Later rules may append to the pending part, mutate its final
        # segment, or fuse into it; its first character never changes, so
        # this prefix probe is safe.
        if pending and (new_pos >= len(self.word)
                        or self.word[new_pos] != pending[0]):
            return
        self._step(new_state, new_pos, floor, n_members, member_ok)


def _build_analysis(word: str, pieces: list[Piece], parts: list[str],
                    items: list, lexicon: Lexicon) -> Analysis:
    offsets = []
    pos = 0
    for part in parts:
        offsets.append((pos, pos + len(part)))
        pos += len(part)

    out_pieces = []
    members: list[tuple[RootEntry, SuffixEntry | None]] = []
    for i, piece in enumerate(pieces):
        start, end = offsets[i]
        item = items[i]
        if piece.is_root:
            use: RootUse = item
            out_pieces.append(AnalysisPiece(
                start, end, "root", use.entry.form, parts[i],
                (use.sense.context,), use.sense.gloss, use.entry.category,
                use.sense.context))
            members.append((use.entry, None))
        else:
            entry: SuffixEntry = item
            if entry.tag == "CA" and members and members[-1][1] is None \
                    and pieces[i - 1].is_root:
                members[-1] = (members[-1][0], entry)
            out_pieces.append(AnalysisPiece(
                start, end, "suffix", entry.id, parts[i], (entry.tag,),
                effect=entry.valency_effect, slot=entry.slot,
                fused_with_prev=piece.fused))

    stem_valency = compound_valency(members) if len(members) >= 2 else None
    return Analysis(word, tuple(out_pieces), plan_trace(items), stem_valency)


def _expand_senses(pieces: list[Piece], parts: list[str], word: str,
                   lexicon: Lexicon) -> list[Analysis]:
    """Turn one piece path into analyses, one per root-sense combination."""
    shaped = []
    for i, piece in enumerate(pieces):
        if piece.is_root:
            shaped.append(((), parts[i]))
        else:
            entry = lexicon.suffixes[piece.suffix_id]
            shaped.append(((entry.tag,), parts[i]))
    if not surface_licensing_ok(shaped):
        return []

    sense_choices = []
    first = True
    for piece in pieces:
        if piece.is_root:
            entry = lexicon.roots[(piece.form, piece.category)]
            senses = entry.senses
            # An incorporated demonstrative is a fixed construction; its
            # citation sense stands for all of them.
            if not first and entry.category == "demonstrative":
                senses = senses[:1]
            sense_choices.append([RootUse(entry, s) for s in senses])
            first = False

    analyses = []
    for combo in itertools.product(*sense_choices):
        combo_iter = iter(combo)
        items = [next(combo_iter) if p.is_root
                 else lexicon.suffixes[p.suffix_id] for p in pieces]
        if validate_plan(items, lexicon):
            continue
        analyses.append(_build_analysis(word, pieces, parts, items, lexicon))
    return analyses


def analyse(word: str, lexicon: Lexicon | None = None,
            rules: RuleTable | None = None) -> list[Analysis]:
    """All licit glossed analyses of a surface word, best ranked first.

    Characters outside the alphabet raise :class:`alphabet.AlphabetError`;
    a well-formed word with no parse returns an empty list.
    """
    if not word:
        raise ValueError("word must be non-empty")
    alphabet.segments(word)
    lexicon, rules = _defaults(lexicon, rules)

    analyses: list[Analysis] = []
    seen = set()
    for pieces, parts in _Searcher(word, lexicon, rules).run():
        for analysis in _expand_senses(pieces, parts, word, lexicon):
            marker = (analysis.key(),
                      tuple((p.start, p.end) for p in analysis.pieces))
            if marker not in seen:
                seen.add(marker)
                analyses.append(analysis)
    analyses.sort(key=lambda a: a.score)
    return analyses


def _resolve_root(root, lexicon: Lexicon) -> RootEntry:
    if isinstance(root, RootEntry):
        return root
    entries = lexicon.roots_by_form(str(root))
    if not entries:
        raise KeyError(f"unknown root {root!r}")
    verbs = [e for e in entries if e.category == "verb"]
    if len(entries) > 1 and not verbs:
        raise KeyError(f"ambiguous root {root!r}; pass a RootEntry")
    return verbs[0] if verbs else entries[0]


def generate(root, sense_context: str, suffix_ids,
             lexicon: Lexicon | None = None,
             rules: RuleTable | None = None) -> str:
    """Surface form for a root sense plus an ordered list of suffix ids.

    The sequence is validated first; any violations are surfaced verbatim
    on the raised :class:`GenerationError`.  Deterministic: allomorphs
    are picked by the first context match.
    """
    lexicon, rules = _defaults(lexicon, rules)
    entry = _resolve_root(root, lexicon)
    suffix_entries = []
    for sid in suffix_ids:
        if sid not in lexicon.suffixes:
            raise KeyError(f"unknown suffix id {sid!r}")
        suffix_entries.append(lexicon.suffixes[sid])
    violations = validate_sequence((entry, sense_context), suffix_entries,
                                   lexicon)
    if violations:
        raise GenerationError(f"invalid sequence for {entry.form!r}",
                              violations)
    state = extend_realization(new_realization(),
                               Piece(entry.form, "root",
                                     category=entry.category),
                               rules, lexicon)
    for suffix in suffix_entries:
        surface = state.surface
        chosen = (select_allomorph(suffix, alphabet.final_segment(surface))
                  if surface else suffix.allomorphs[0].surface)
        state = extend_realization(
            state, Piece(chosen, "suffix", suffix_id=suffix.id),
            rules, lexicon)
    return state.surface


def gloss_render(analysis: Analysis) -> str:
    """Interlinear gloss line: root as CODE.sense, suffixes as +TAG.

    Verb roots are coded by the valency context of the sense in use,
    other roots by their lexical category; incorporated object nouns are
    reduced to their bare category code.  A fused pair shares one token.
    A compound stem is annotated with its resulting valency right after
    its last member (and that member's own causative, if any).
    """
    tokens: list[str] = []
    root_seen = False
    last_member_token = -1
    n_members = 0
    for i, piece in enumerate(analysis.pieces):
        if piece.kind == "root":
            n_members += 1
            if piece.category == "verb":
                code = piece.sense_context or "IV"
                body = f"{code}.{piece.gloss}"
            else:
                code = tags.CATEGORY_CODES.get(piece.category, "NN")
                if root_seen and code == "NN":
                    body = "NN"   # incorporated object noun
                else:
                    body = f"{code}.{piece.gloss}"
            tokens.append(body if not root_seen else f"+{body}")
            root_seen = True
            last_member_token = len(tokens) - 1
        else:
            tag = piece.tags[0]
            if piece.fused_with_prev and tokens:
                tokens[-1] = tokens[-1] + f"+{tag}"
            else:
                tokens.append(f"+{tag}")
            if tag == "CA" and analysis.pieces[i - 1].kind == "root":
                if last_member_token == len(tokens) - 2:
                    last_member_token = len(tokens) - 1
    if n_members >= 2 and analysis.stem_valency:
        tokens.insert(last_member_token + 1, f"-CR.{analysis.stem_valency}")
    return " ".join(tokens)


def normalize_gloss(gloss: str) -> str:
    """Comparison form of a gloss line.

    The source notation varies in the sign it puts on compound members
    (+TV.say vs -TV.say) and in whether it prints the compound valency
    marker at all, so comparisons strip leading +/- and drop CR tokens.
    """
    tokens = []
    for token in gloss.split():
        body = token.lstrip("+-")
        if body in ("CR.TV", "CR.IV"):
            continue
        tokens.append(body)
    return " ".join(tokens)


def gloss_set(analyses) -> set[str]:
    return {normalize_gloss(gloss_render(a)) for a in analyses}
