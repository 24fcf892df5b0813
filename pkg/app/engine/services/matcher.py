# engine/services/matcher.py
from app.engine.schemas.state_types import GenNode
from app.grammar.schemas.rule_types import ConstraintKind, FeatureConstraint, NodeSpec


def match_constraint(constraint: FeatureConstraint, node: GenNode) -> bool:
    """Test a single feature, attribute or key=value constraint against a node."""
    kind = constraint.kind
    if kind is ConstraintKind.FEATURE:
        return node.holds(constraint.token)
    if kind is ConstraintKind.NEGATED_FEATURE:
        return not node.holds(constraint.token)
    if kind is ConstraintKind.ATTRIBUTE:
        return constraint.token in node.attrs
    if kind is ConstraintKind.NEGATED_ATTRIBUTE:
        return constraint.token not in node.attrs
    if kind is ConstraintKind.KEY_VALUE:
        return node.has_key_value(constraint.key, constraint.value)
    if kind is ConstraintKind.DISJUNCTION:
        return any(node.holds(member) for member in constraint.members)
    return True


def match_node(spec: NodeSpec, node: GenNode) -> bool:
    """A node spec matches when all of its constraints hold; an empty spec matches anything."""
    return all(match_constraint(constraint, node) for constraint in spec.constraints)
