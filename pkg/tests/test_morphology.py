import random

import pytest

from app.engine.schemas.state_types import GenNode
from app.exceptions import StripTooLongError
from app.grammar.schemas.rule_types import AffixOp
from app.grammar.services.rule_parser import parse_flx_spec
from app.morphology.services.inflector import apply_affix, eval_condition, inflect, select_case


def make_node(surface='ਉਹ', features=(), kv=None, flx=None):
    return GenNode(
        uid=0,
        surface=surface,
        origin=('00', '01'),
        features=list(features),
        kv=dict(kv or {}),
        pending_flx=parse_flx_spec(flx) if flx else None,
        label='01',
    )


def condition(text):
    return parse_flx_spec(text + ':=0>""').cases[0].condition


class TestEvalCondition:

    def test_key_value_satisfies_bare_token(self):
        node = make_node(features=['V', 'PER', 'PRS', 'MCL'], kv={'NUM': 'SNG'})
        assert eval_condition(condition('PER&PRS&MCL&SNG'), node)

    def test_missing_token(self):
        assert not eval_condition(condition('AGT'), make_node(features=['R']))

    def test_contradiction(self):
        for features in ([], ['A'], ['A', 'B']):
            assert not eval_condition(condition('A&^A'), make_node(features=features))

    def test_negated_token(self):
        node = make_node(features=['PST', 'SNG'])
        assert eval_condition(condition('PST&^PGS'), node)
        assert not eval_condition(condition('PST&^SNG'), node)

    def test_key_names_are_not_tokens(self):
        node = make_node(features=['V'], kv={'PER': '3PS'})
        assert not eval_condition(condition('PER'), node)
        assert eval_condition(condition('3PS'), node)


class TestApplyAffix:

    def test_plural_noun(self):
        assert apply_affix('ਕਿਤਾਬ', AffixOp(0, 'ਾਂ')) == 'ਕਿਤਾਬਾਂ'

    def test_auxiliary(self):
        assert apply_affix('ਪਹੁੰਚ', AffixOp(0, ' ਚੁੱਕਾ ਹੈ')) == 'ਪਹੁੰਚ ਚੁੱਕਾ ਹੈ'

    def test_identity(self):
        for surface in ['', 'x', 'ਉਹ', 'ਪਹੁੰਚ ਚੁੱਕਾ']:
            assert apply_affix(surface, AffixOp(0, '')) == surface

    def test_strip_counts_scalar_values(self):
        assert apply_affix('ਕਿਤਾਬਾਂ', AffixOp(2, '')) == 'ਕਿਤਾਬ'

    def test_strip_too_long(self):
        with pytest.raises(StripTooLongError) as exc:
            apply_affix('ਉਹ', AffixOp(3, 'x'))
        assert exc.value.strip == 3

    def test_length_law(self):
        rng = random.Random(3)
        gurmukhi = [chr(code) for code in range(0x0A01, 0x0A76)]
        for _ in range(2000):
            surface = ''.join(rng.choice(gurmukhi) for _ in range(rng.randint(0, 10)))
            append = ''.join(rng.choice(gurmukhi + [' ']) for _ in range(rng.randint(0, 5)))
            strip = rng.randint(0, len(surface))
            result = apply_affix(surface, AffixOp(strip, append))
            assert len(result) == len(surface) - strip + len(append)
            assert result.endswith(append)


class TestInflect:

    def test_plural_pronoun(self):
        node = make_node(features=['R', 'FLX', 'PLR'], flx='SNG:=0>""; PLR:=0>"ਨਾਂ"')
        result, outcome = inflect(node)
        assert result.surface == 'ਉਹਨਾਂ'
        assert outcome.matched_case == 1
        assert result.pending_flx is None
        assert result.inflected

    def test_no_case_matches(self):
        node = make_node(features=['R', 'FLX'], flx='AGT:=0>"ਨੂੰ"')
        result, outcome = inflect(node)
        assert result.surface == 'ਉਹ'
        assert outcome.matched_case is None
        assert not outcome.changed
        assert 'no case matched, surface unchanged' in outcome.describe()
        assert result.inflected

    def test_first_matching_case_wins(self):
        node = make_node(surface='ab', features=['A', 'B'], flx='A:=0>"1"; B:=0>"2"; A&B:=0>"3"')
        result, outcome = inflect(node)
        assert result.surface == 'ab1'
        assert outcome.matched_case == 0
        assert select_case(node.pending_flx, node) == 0

    def test_disjoint_case_order_does_not_matter(self):
        forward = make_node(features=['PLR'], flx='SNG:=0>"a"; PLR:=0>"b"')
        backward = make_node(features=['PLR'], flx='PLR:=0>"b"; SNG:=0>"a"')
        assert inflect(forward)[0].surface == inflect(backward)[0].surface

    def test_input_node_is_untouched(self):
        node = make_node(features=['PLR'], flx='PLR:=0>"ਨਾਂ"')
        inflect(node)
        assert node.surface == 'ਉਹ'
        assert node.pending_flx is not None
        assert not node.inflected

    def test_requires_pending_paradigm(self):
        with pytest.raises(ValueError):
            inflect(make_node())

    def test_strip_too_long_propagates(self):
        with pytest.raises(StripTooLongError):
            inflect(make_node(surface='x', features=['A'], flx='A:=5>""'))
