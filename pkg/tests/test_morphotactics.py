import pytest
from hypothesis import given
from hypothesis import strategies as st

from mapumorph.morphotactics import (RootUse, compound_valency,
                                     fal_segmentations, valency_step,
                                     validate_plan, validate_sequence)


def codes(violations):
    return [v.code for v in violations]


class TestValencyStep:
    @pytest.mark.parametrize("state,effect,expected", [
        ("IV", "increase", "TV"),
        ("TV", "increase", "TV2"),
        ("TV2", "increase", "TV2"),
        ("TV", "decrease", "IV"),
        ("TV2", "decrease", "TV"),
        ("IV", "decrease", "IV"),
        ("TV", "neutral", "TV"),
        ("IV", "neutral", "IV"),
        ("TV", "agreement_tv_only", "TV"),
    ])
    def test_table(self, state, effect, expected):
        assert valency_step(state, effect) == expected

    @given(st.sampled_from(["IV", "TV", "TV2"]),
           st.lists(st.sampled_from(["increase", "decrease", "neutral",
                                     "agreement_tv_only"]), max_size=12))
    def test_total_and_closed(self, state, effects):
        for effect in effects:
            state = valency_step(state, effect)
            assert state in ("IV", "TV", "TV2")


class TestValidateSequence:
    def test_causative_chain_on_intransitive(self, lexicon):
        root = lexicon.roots[("küpa", "verb")]
        assert validate_sequence((root, "IV"), ["CA.l", "IND1SG.n"]) == []

    def test_causative_on_transitive_rejected(self, lexicon):
        root = lexicon.roots[("elu", "verb")]
        found = validate_sequence((root, "TV"), ["CA.m", "IND.y", "P3.ng"])
        assert "CA_on_TV" in codes(found)

    def test_labile_intransitive_sense_with_causative(self, lexicon):
        root = lexicon.roots[("monge", "verb")]
        seq = ["CA.l", "HAB.ke", "AGR.fi", "IND.y", "P1.i", "PL.un"]
        assert validate_sequence((root, "IV"), seq) == []

    def test_labile_root_licenses_bare_agreement(self, lexicon):
        root = lexicon.roots[("aye", "verb")]
        seq = ["CONT.ka", "AGR.fi", "IND1SG.n"]
        assert validate_sequence((root, "TV"), seq) == []
        # the intransitive sense passes too: the root is listed in both
        # valency classes, which is exactly what the agreement marks
        assert validate_sequence((root, "IV"), seq) == []

    def test_agreement_on_plain_intransitive_rejected(self, lexicon):
        root = lexicon.roots[("weyel", "verb")]
        found = validate_sequence((root, "IV"), ["AGR.fi", "IND1SG.n"])
        assert "AGR_on_IV" in codes(found)

    def test_persistent_aspect_licenses_agreement(self, lexicon):
        root = lexicon.roots[("weyel", "verb")]
        seq = ["PFPS.kunu", "AGR.fi", "IND1SG.n"]
        assert validate_sequence((root, "IV"), seq) == []

    def test_m_causative_rejected_on_loan(self, lexicon):
        root = lexicon.roots[("kansa", "verb")]
        found = validate_sequence((root, "IV"), ["CA.m", "IND1SG.n"])
        assert "um_on_loan" in codes(found)
        assert validate_sequence((root, "IV"), ["CA.l", "IND1SG.n"]) == []

    def test_slot_order_enforced(self, lexicon):
        root = lexicon.roots[("küpa", "verb")]
        found = validate_sequence((root, "IV"),
                                  ["HAB.ke", "CA.l", "IND1SG.n"])
        assert "slot_order" in codes(found)

    def test_same_slot_suffixes_conflict(self, lexicon):
        root = lexicon.roots[("küpa", "verb")]
        found = validate_sequence((root, "IV"),
                                  ["PRPS.nie", "PFPS.kunu", "IND1SG.n"])
        assert "slot_conflict" in codes(found)

    def test_missing_mood_on_bare_verb_root(self, lexicon):
        root = lexicon.roots[("monge", "verb")]
        assert "missing_mood" in codes(validate_sequence((root, "IV"), []))

    def test_missing_person_on_finite_mood(self, lexicon):
        root = lexicon.roots[("küpa", "verb")]
        found = validate_sequence((root, "IV"), ["IND.y"])
        assert "missing_person" in codes(found)

    def test_citation_stem_is_valid(self, lexicon):
        root = lexicon.roots[("anel", "verb")]
        assert validate_sequence((root, "TV"), ["TR.tu"]) == []

    def test_stative_on_transitive_roots_is_legal(self, lexicon):
        # stativity must not be encoded as an intransitivity test
        elu = lexicon.roots[("elu", "verb")]
        seq = ["REF.w", "ST.le", "RI.fu", "IND1SG.n"]
        assert validate_sequence((elu, "TV"), seq) == []
        pi = lexicon.roots[("pi", "verb")]
        assert validate_sequence((pi, "TV"), ["ST.le", "IND.y", "P3.ng"]) == []

    def test_stative_excludes_slot6_agreement(self, lexicon):
        root = lexicon.roots[("elu", "verb")]
        found = validate_sequence((root, "TV"),
                                  ["ST.le", "AGR.fi", "IND.y", "P3.ng"])
        assert "slot_conflict" in codes(found)

    def test_inverse_needs_agent_and_vice_versa(self, lexicon):
        root = lexicon.roots[("kewa", "verb")]
        found = validate_sequence((root, "TV"), ["AGR.e", "IND.y", "P3.ng"])
        assert "inverse_requires_agent" in codes(found)
        found = validate_sequence((root, "TV"), ["IND.y", "P3.ng", "A3.ew"])
        assert "agent_requires_inverse" in codes(found)

    def test_unknown_suffix_id_raises(self, lexicon):
        root = lexicon.roots[("küpa", "verb")]
        with pytest.raises(KeyError):
            validate_sequence((root, "IV"), ["NOPE.x"])

    def test_trace_reaches_second_object(self, lexicon):
        from mapumorph.morphotactics import plan_trace
        root = lexicon.roots[("ngül", "verb")]
        items = [RootUse(root, root.senses[0]), lexicon.suffixes["CA.m"],
                 lexicon.suffixes["IO.nma"], lexicon.suffixes["AGR.e"],
                 lexicon.suffixes["IND1SG.n"], lexicon.suffixes["A3.ew"]]
        states = [state for _, state in plan_trace(items)]
        assert states[:3] == ["IV", "TV", "TV2"]


class TestCompoundValency:
    def test_transitive_later_member_wins(self, lexicon):
        pura = lexicon.roots[("püra", "verb")]
        ye = lexicon.roots[("ye", "verb")]
        ca = lexicon.suffixes["CA.m"]
        assert compound_valency([(pura, ca), (ye, None)]) == "TV"

    def test_causative_on_last_member_transitivises(self, lexicon):
        tofku = lexicon.roots[("tofkü", "verb")]
        pura = lexicon.roots[("püra", "verb")]
        assert compound_valency([(tofku, None),
                                 (pura, lexicon.suffixes["CA.m"])]) == "TV"

    def test_double_causativisation(self, lexicon):
        reng = lexicon.roots[("reng", "verb")]
        nag = lexicon.roots[("nag", "adverb")]
        ca = lexicon.suffixes["CA.m"]
        assert compound_valency([(reng, ca), (nag, ca)]) == "TV"

    def test_incorporated_noun_detransitivises(self, lexicon):
        elu = lexicon.roots[("elu", "verb")]
        che = lexicon.roots[("che", "noun")]
        assert compound_valency([(elu, None), (che, None)]) == "IV"

    def test_needs_two_members(self, lexicon):
        with pytest.raises(ValueError):
            compound_valency([(lexicon.roots[("elu", "verb")], None)])


class TestFalSegmentations:
    def test_transitive_stem_gets_three_readings(self, lexicon):
        found = fal_segmentations("TV", "faleymün", lexicon)
        assert [label for label, _, _ in found] == ["FORCE", "DP+CA", "DP+ST"]
        force = found[0]
        assert force[1] == ["FORCE.fal"] and force[2] == "eymün"

    def test_word_final_tail(self, lexicon):
        found = fal_segmentations("TV", "fal", lexicon)
        assert [label for label, _, _ in found] == ["ADJDO", "DP+CA+NOM"]

    def test_intransitive_stem_drops_force_reading(self, lexicon):
        found = fal_segmentations("IV", "fal", lexicon)
        assert [label for label, _, _ in found] == ["DP+CA+NOM"]

    def test_rejects_other_tails(self, lexicon):
        with pytest.raises(ValueError):
            fal_segmentations("TV", "leymün", lexicon)


class TestMemberLicensing:
    def test_member_blocked_after_inflection(self, lexicon):
        kewa = lexicon.roots[("kewa", "verb")]
        nie = lexicon.roots[("nie", "verb")]
        items = [RootUse(kewa, kewa.senses[0]), lexicon.suffixes["HAB.ke"],
                 RootUse(nie, nie.senses[0]), lexicon.suffixes["IND.y"],
                 lexicon.suffixes["P3.ng"]]
        assert "member_position" in codes(validate_plan(items, lexicon))

    def test_adverb_member_needs_causative(self, lexicon):
        llüka = lexicon.roots[("llüka", "verb")]
        la = lexicon.roots[("la", "adjective")]
        items = [RootUse(llüka, llüka.senses[0]), RootUse(la, la.senses[0]),
                 lexicon.suffixes["IND.y"], lexicon.suffixes["P3.ng"]]
        assert "member_needs_causative" in codes(validate_plan(items, lexicon))

    def test_noun_incorporation_needs_transitive_stem(self, lexicon):
        kon = lexicon.roots[("kon", "verb")]
        che = lexicon.roots[("che", "noun")]
        items = [RootUse(kon, kon.senses[0]), RootUse(che, che.senses[0]),
                 lexicon.suffixes["IND.y"], lexicon.suffixes["P3.ng"]]
        assert "noun_incorporation" in codes(validate_plan(items, lexicon))
