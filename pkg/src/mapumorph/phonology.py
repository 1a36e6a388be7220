"""Morpheme-boundary sound rules: apply them in generation, undo them in
analysis.

Rules live in a TSV table (``id kind left right rewrite exceptions``):

* ``kind``: prothesis, sandhi, epenthesis or fusion.
* ``left``: pattern on the piece before the boundary: ``=form`` or
  ``=form:category`` (whole-lexeme match), a single segment literal
  (``f``, ``g``), ``V``/``C``, or ``suffix:ID``.
* ``right``: same pattern language for the piece after the boundary.
* ``rewrite``: ``&``-joined ops among ``left:append:X``, ``left:final:X``,
  ``right:prefix:X``, ``right:set:X`` and ``fuse:X``.
* ``exceptions``: comma list of lexemes (``form`` or ``form:category``)
  that never undergo the rule; ``-`` for none.

Application is single pass, one rule per boundary, in table order.  All
functions here are pure; tables are immutable after loading.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path

from . import alphabet
from .lexicon import Lexicon, SuffixEntry

RULE_KINDS = ("prothesis", "sandhi", "allomorph_selection", "epenthesis", "fusion")


class PhonologyError(ValueError):
    pass


@dataclass(frozen=True)
class Piece:
    """One underlying morph in a boundary sequence."""

    form: str                      # root form, or suffix allomorph surface
    kind: str                      # "root" or "suffix"
    category: str | None = None    # lexical category, for roots
    suffix_id: str | None = None   # suffix entry id, when known
    fused: bool = False            # surface suppressed by agreement fusion

    @property
    def is_root(self) -> bool:
        return self.kind == "root"


@dataclass(frozen=True)
class BoundaryRule:
    id: str
    kind: str
    left: str
    right: str
    rewrite: tuple[str, ...]
    exceptions: tuple[str, ...] = ()

    def rewrite_op(self, prefix: str) -> str | None:
        for op in self.rewrite:
            if op.startswith(prefix):
                return op[len(prefix):]
        return None


@dataclass(frozen=True)
class RuleTable:
    rules: tuple[BoundaryRule, ...] = ()

    def of_kind(self, kind: str) -> tuple[BoundaryRule, ...]:
        return tuple(r for r in self.rules if r.kind == kind)

    def with_exception(self, rule_id: str, lexeme: str) -> "RuleTable":
        """Copy of the table with one more exception lexeme on a rule."""
        out = []
        for rule in self.rules:
            if rule.id == rule_id:
                rule = replace(rule, exceptions=rule.exceptions + (lexeme,))
            out.append(rule)
        return RuleTable(tuple(out))


def parse_rule_line(line: str) -> BoundaryRule:
    cols = line.split("\t")
    if len(cols) < 6:
        raise PhonologyError(f"expected 6 tab-separated columns, got {len(cols)}")
    rid, kind, left, right, rewrite, exceptions = (c.strip() for c in cols[:6])
    if kind not in RULE_KINDS:
        raise PhonologyError(f"unknown rule kind {kind!r}")
    ops = tuple(op.strip() for op in rewrite.split("&") if op.strip())
    exc = tuple(e.strip() for e in exceptions.split(",")
                if e.strip() and e.strip() != "-")
    return BoundaryRule(rid, kind, left, right, ops, exc)


def load_rules(path: str | Path) -> RuleTable:
    rules = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.rstrip()
        if not line or line.lstrip().startswith("#"):
            continue
        try:
            rules.append(parse_rule_line(line))
        except PhonologyError as err:
            raise PhonologyError(f"{path}:{lineno}: {err}") from None
    return RuleTable(tuple(rules))


def _lexeme_matches(pattern: str, piece: Piece) -> bool:
    body = pattern[1:]
    if ":" in body:
        form, category = body.split(":", 1)
        return piece.form == form and piece.category == category
    return piece.form == body


def _pattern_matches(pattern: str, piece: Piece, preceding: str,
                     lexicon: Lexicon | None) -> bool:
    """Match a left/right pattern against a piece.

    ``preceding`` is the surface realised so far (used for V/C and
    segment-literal patterns on the left side).
    """
    if pattern in ("", "-", "any"):
        return True
    if pattern.startswith("="):
        return _lexeme_matches(pattern, piece)
    if pattern.startswith("suffix:"):
        wanted = pattern.split(":", 1)[1]
        if piece.suffix_id is not None:
            return piece.suffix_id == wanted
        if piece.kind != "suffix":
            return False
        if lexicon is not None and wanted in lexicon.suffixes:
            return piece.form in lexicon.suffixes[wanted].surfaces()
        return False
    # segment patterns apply to the realised surface before the boundary
    if not preceding:
        return False
    final = alphabet.final_segment(preceding)
    if pattern == "V":
        return alphabet.is_vowel(final)
    if pattern == "C":
        return not alphabet.is_vowel(final)
    return final == pattern


def _excepted(rule: BoundaryRule, piece: Piece) -> bool:
    for lexeme in rule.exceptions:
        if ":" in lexeme:
            form, category = lexeme.split(":", 1)
            if piece.form == form and piece.category == category:
                return True
        elif piece.form == lexeme:
            return True
    return False


def _replace_final(surface: str, segment: str) -> str:
    segs = alphabet.segments(surface)
    segs[-1] = segment
    return "".join(segs)


def normalize_piece(item, first: bool, lexicon: Lexicon | None) -> Piece:
    """Coerce a str / (form, category) / Piece into a Piece.

    Bare strings after the first position resolve to a suffix when they
    match some suffix allomorph surface, otherwise to a root (compound
    member).  ``ø`` and ``0`` denote zero-surface pieces.
    """
    if isinstance(item, Piece):
        return item
    if isinstance(item, tuple):
        form, category = item
        return Piece(form, "root", category=category)
    form = str(item)
    if form in ("ø", "0"):
        return Piece("", "suffix")
    if first:
        return Piece(form, "root")
    if lexicon is not None and lexicon.suffixes:
        owners = sorted(sid for sid, entry in lexicon.suffixes.items()
                        if form in entry.surfaces())
        if owners:
            preferred = "CA.m" if "CA.m" in owners else owners[0]
            return Piece(form, "suffix", suffix_id=preferred)
        if any(r.form == form for r in lexicon.roots.values()):
            return Piece(form, "root")
    return Piece(form, "suffix")


def select_allomorph(suffix: SuffixEntry, stem_final: str,
                     generation: bool = True) -> str:
    """Pick the allomorph for a suffix after the given stem-final segment.

    Generation returns the first context match (V after vowel, C after
    consonant, 'any' as fallback); analysis callers set
    ``generation=False`` to get every matching surface instead.
    """
    kind = "V" if alphabet.is_vowel(stem_final) else "C"
    matches = [a.surface for a in suffix.allomorphs if a.matches(kind)]
    if not matches:
        raise PhonologyError(
            f"no allomorph of {suffix.id} fits after {stem_final!r}")
    return matches[0] if generation else matches


def matching_allomorphs(suffix: SuffixEntry, preceding_surface: str) -> list[str]:
    """All allomorph surfaces usable after the given realised surface."""
    if not preceding_surface:
        return [a.surface for a in suffix.allomorphs]
    kind = alphabet.final_kind(preceding_surface)
    return [a.surface for a in suffix.allomorphs if a.matches(kind)]


@dataclass
class _Realization:
    pieces: list[Piece] = field(default_factory=list)
    parts: list[str] = field(default_factory=list)

    @property
    def surface(self) -> str:
        return "".join(self.parts)


def _extend(state: _Realization, piece: Piece, rules: RuleTable,
            lexicon: Lexicon | None, index: int) -> None:
    if not state.pieces:
        if not piece.is_root:
            raise PhonologyError("sequence must start with a root")
        state.pieces.append(piece)
        state.parts.append(piece.form)
        return

    prev = state.pieces[-1]
    preceding = state.surface
    surface = "" if piece.fused else piece.form

    for rule in rules.rules:
        if _excepted(rule, prev) or _excepted(rule, piece):
            continue
        if not _pattern_matches(rule.left, prev, preceding, lexicon):
            continue
        if not _pattern_matches(rule.right, piece, preceding, lexicon):
            continue
        if rule.kind == "fusion":
            fused = rule.rewrite_op("fuse:")
            if fused is not None:
                state.parts[-1] = fused
                state.pieces.append(replace(piece, fused=True))
                state.parts.append("")
                return
        append = rule.rewrite_op("left:append:")
        if append is not None:
            state.parts[-1] = state.parts[-1] + append
        final = rule.rewrite_op("left:final:")
        if final is not None:
            state.parts[-1] = _replace_final(state.parts[-1], final)
        forced = rule.rewrite_op("right:set:")
        if forced is not None and not piece.fused:
            surface = forced
        prefix = rule.rewrite_op("right:prefix:")
        if prefix is not None and not piece.fused:
            surface = prefix + surface
        break  # at most one rule per boundary

    state.pieces.append(piece)
    state.parts.append(surface)


def realize_parts(seq, lexicon: Lexicon | None = None,
                  rules: RuleTable | None = None) -> list[str]:
    """Per-piece surfaces of a morph sequence after rule application."""
    if rules is None:
        from .defaults import default_rules
        rules = default_rules()
    if lexicon is None:
        from .defaults import default_lexicon
        lexicon = default_lexicon()
    if not seq:
        raise PhonologyError("empty morph sequence")
    state = _Realization()
    for i, item in enumerate(seq):
        piece = normalize_piece(item, i == 0, lexicon)
        try:
            _extend(state, piece, rules, lexicon, i)
        except alphabet.AlphabetError as err:
            raise PhonologyError(f"boundary {i}: {err}") from None
    return state.parts


def realize(seq, lexicon: Lexicon | None = None,
            rules: RuleTable | None = None) -> str:
    """Surface form of an underlying morph sequence.

    Deterministic: rules apply left to right, one pass, at most one rule
    per boundary.  Pieces may be given as plain strings, as
    ``(form, category)`` pairs (needed when homographs differ in their
    rule behaviour, e.g. nag 'down' vs nag- 'go down'), or as
    :class:`Piece` objects.
    """
    return "".join(realize_parts(seq, lexicon, rules))


def extend_realization(state: _Realization, piece: Piece, rules: RuleTable,
                       lexicon: Lexicon | None) -> _Realization:
    """Functional single-piece extension used by the analyser's search."""
    new = _Realization(list(state.pieces), list(state.parts))
    _extend(new, piece, rules, lexicon, len(new.pieces))
    return new


def new_realization() -> _Realization:
    return _Realization()


def fuse_agreement(seq, lexicon: Lexicon | None = None) -> list[Piece]:
    """Mark indicative pieces that fuse into a preceding agreement -fi.

    The printed analyses keep both gloss tags while the two underlying
    pieces share one surface span; here that is modelled by keeping both
    pieces and silencing the indicative one, not by a null morpheme.
    Identity when the pattern is absent.
    """
    if lexicon is None:
        from .defaults import default_lexicon
        lexicon = default_lexicon()
    pieces = [normalize_piece(p, i == 0, lexicon) for i, p in enumerate(seq)]
    out: list[Piece] = []
    for piece in pieces:
        prev = out[-1] if out else None
        if (prev is not None and prev.kind == "suffix" and prev.form == "fi"
                and piece.kind == "suffix" and not piece.is_root
                and piece.form in ("i", "y")
                and (piece.suffix_id or "IND").startswith("IND")):
            out.append(replace(piece, suffix_id=piece.suffix_id or "IND.y",
                               fused=True))
            continue
        out.append(piece)
    return out


def unrealize(surface: str, window: int,
              rules: RuleTable | None = None) -> list[tuple[str, str]]:
    """Underlying (left, right) candidates for a boundary in *surface*.

    Superset-correct: includes the identity split and every inverse of
    the segmental rules (prothesis, sandhi, epenthesis) that could have
    produced the observed surface, so it may overgenerate but never
    undergenerates.  Fusion spans are recovered by the analyser's edge
    machinery, not here.
    """
    if rules is None:
        from .defaults import default_rules
        rules = default_rules()
    if not 0 <= window <= len(surface):
        raise ValueError(f"window {window} outside surface bounds")
    left, right = surface[:window], surface[window:]
    candidates = [(left, right)]
    for rule in rules.rules:
        append = rule.rewrite_op("left:append:")
        if append is not None and left.endswith(append) and len(left) > len(append):
            candidates.append((left[:-len(append)], right))
        final = rule.rewrite_op("left:final:")
        if final is not None and left:
            try:
                if alphabet.final_segment(left) == final and not rule.left.startswith("="):
                    candidates.append((_replace_final(left, rule.left), right))
            except alphabet.AlphabetError:
                pass
        prefix = rule.rewrite_op("right:prefix:")
        if prefix is not None and right.startswith(prefix):
            candidates.append((left, right[len(prefix):]))
    seen = set()
    out = []
    for cand in candidates:
        if cand not in seen:
            seen.add(cand)
            out.append(cand)
    return out
