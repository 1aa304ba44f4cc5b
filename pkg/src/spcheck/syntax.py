"""AST node types for actions, events, assertions and plan patterns, plus the
canonical printer.

All nodes are frozen dataclasses so they can be hashed, compared structurally
and used as cache keys.  The printer is the inverse of the parser: for every
node ``parse(print(node)) == node``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple


# ---------------------------------------------------------------------------
# action expressions
# ---------------------------------------------------------------------------

class ActionExpr:
    """Base class for action expressions."""

    __slots__ = ()


@dataclass(frozen=True)
class ActAtom(ActionExpr):
    name: str


@dataclass(frozen=True)
class ActSkip(ActionExpr):
    pass


@dataclass(frozen=True)
class ActNeg(ActionExpr):
    body: "ActionExpr"


@dataclass(frozen=True)
class ActSeq(ActionExpr):
    left: "ActionExpr"
    right: "ActionExpr"


@dataclass(frozen=True)
class ActChoice(ActionExpr):
    left: "ActionExpr"
    right: "ActionExpr"


@dataclass(frozen=True)
class ActPar(ActionExpr):
    left: "ActionExpr"
    right: "ActionExpr"


@dataclass(frozen=True)
class ActAchieve(ActionExpr):
    """Abstract action `any-><goal>`: any action whose outcomes all satisfy
    the goal.  Resolved against the declared action repertoire at evaluation
    time, because the set of achieving actions depends on the world."""

    goal: "Formula"


def action_atoms(a: ActionExpr) -> frozenset:
    """Names of the atomic actions occurring in an action expression."""
    if isinstance(a, ActAtom):
        return frozenset([a.name])
    if isinstance(a, (ActSkip, ActAchieve)):
        return frozenset()
    if isinstance(a, ActNeg):
        return action_atoms(a.body)
    return action_atoms(a.left) | action_atoms(a.right)


# ---------------------------------------------------------------------------
# event expressions (actions annotated with the performing group)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Group:
    """The performers of an event: either an explicit agent set or a role
    name that is resolved to its enactors at the world of evaluation."""

    agents: Tuple[str, ...] = ()
    role: Optional[str] = None

    def is_role(self) -> bool:
        return self.role is not None


class EventExpr:
    __slots__ = ()


@dataclass(frozen=True)
class EvAtom(EventExpr):
    group: Group
    action: ActionExpr


@dataclass(frozen=True)
class EvSkip(EventExpr):
    """The nobody-does-anything event; denotes the single all-skip step."""


@dataclass(frozen=True)
class EvNeg(EventExpr):
    body: "EventExpr"


@dataclass(frozen=True)
class EvSeq(EventExpr):
    left: "EventExpr"
    right: "EventExpr"


@dataclass(frozen=True)
class EvChoice(EventExpr):
    left: "EventExpr"
    right: "EventExpr"


@dataclass(frozen=True)
class EvPar(EventExpr):
    left: "EventExpr"
    right: "EventExpr"


def event_action_atoms(e: EventExpr) -> frozenset:
    if isinstance(e, EvAtom):
        return action_atoms(e.action)
    if isinstance(e, EvSkip):
        return frozenset()
    if isinstance(e, EvNeg):
        return event_action_atoms(e.body)
    return event_action_atoms(e.left) | event_action_atoms(e.right)


# ---------------------------------------------------------------------------
# assertions
# ---------------------------------------------------------------------------

class Formula:
    __slots__ = ()


@dataclass(frozen=True)
class FAtom(Formula):
    name: str


@dataclass(frozen=True)
class FBool(Formula):
    value: bool


@dataclass(frozen=True)
class FNot(Formula):
    body: "Formula"


@dataclass(frozen=True)
class FAnd(Formula):
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class FOr(Formula):
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class FImp(Formula):
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class FBox(Formula):
    event: EventExpr
    body: "Formula"


@dataclass(frozen=True)
class FDiamond(Formula):
    event: EventExpr
    body: "Formula"


@dataclass(frozen=True)
class FCap(Formula):
    agent: str
    action: ActionExpr


@dataclass(frozen=True)
class FDone(Formula):
    event: EventExpr


@dataclass(frozen=True)
class FDo(Formula):
    event: EventExpr


@dataclass(frozen=True)
class FDonePart(Formula):
    """DONE(a, b, alpha(A)): a performed b as its part of the group action."""

    agent: str
    part: str
    group: Group
    action: ActionExpr


@dataclass(frozen=True)
class FDoPart(Formula):
    agent: str
    part: str
    group: Group
    action: ActionExpr


@dataclass(frozen=True)
class FBelief(Formula):
    agent: str
    body: "Formula"


@dataclass(frozen=True)
class FEveryoneBelieves(Formula):
    agents: Tuple[str, ...]
    body: "Formula"


@dataclass(frozen=True)
class FCommonBelief(Formula):
    agents: Tuple[str, ...]
    body: "Formula"


@dataclass(frozen=True)
class FGoal(Formula):
    agent: str
    body: "Formula"


@dataclass(frozen=True)
class FAbleAction(Formula):
    """G over an action: capable and the action has a defined outcome here."""

    agent: str
    action: ActionExpr


@dataclass(frozen=True)
class FAbleFormula(Formula):
    """G over a formula: some capable action possibly brings the formula about."""

    agent: str
    body: "Formula"


@dataclass(frozen=True)
class FAttempt(Formula):
    """H: some action is performed next that possibly brings the body about."""

    agent: str
    body: "Formula"


@dataclass(frozen=True)
class FStit(Formula):
    """E: some action is performed next that certainly brings the body about."""

    agent: str
    body: "Formula"


@dataclass(frozen=True)
class FOblig(Formula):
    event: EventExpr
    violation: str


@dataclass(frozen=True)
class FForbid(Formula):
    event: EventExpr
    violation: str


@dataclass(frozen=True)
class FPerm(Formula):
    event: EventExpr
    violation: str


@dataclass(frozen=True)
class FNormRule(Formula):
    """ADIC norm head: flavor O/F/P bound to a role, with condition, aim and
    optional sanction."""

    flavor: str  # "O" | "F" | "P"
    role: str
    condition: "Formula"
    action: ActionExpr
    sanction: Optional[ActionExpr]
    violation: str


@dataclass(frozen=True)
class FPurpose(Formula):
    """All purpose variants share one head; `variant` selects the clause.

    basic:    subject=agent, action set      -> purpose(a:alpha, c, phi)
    general:  subject=None, action set       -> purpose(alpha, c, phi)
    complex:  subject=agent, action set      -> purpose(a, gamma, c, phi)
    group:    subject=agent tuple            -> purpose(A, gamma, c, phi)
    role:     subject=role name              -> purpose(r, gamma, c, phi)
    practice: subject=None, action=None      -> purpose(c, phi)
    """

    variant: str
    subject: object
    action: Optional[ActionExpr]
    context: str
    goal: "Formula"


@dataclass(frozen=True)
class FStrategy(Formula):
    condition: "Formula"
    consequent: "Formula"  # a DO(...) or H-form assertion
    context: str


@dataclass(frozen=True)
class FCountsAs(Formula):
    context: str
    role: str
    concrete: ActionExpr
    institutional: ActionExpr


@dataclass(frozen=True)
class FPromotes(Formula):
    context: str
    role: str
    action: ActionExpr
    value: str
    demotes: bool = False


@dataclass(frozen=True)
class FAffords(Formula):
    objects: Tuple[str, ...]
    action: str
    context: str


@dataclass(frozen=True)
class FAvailable(Formula):
    objects: Tuple[str, ...]
    context: str


@dataclass(frozen=True)
class FPlay(Formula):
    agent: str
    role: str
    context: Optional[str]


@dataclass(frozen=True)
class FActive(Formula):
    context: str


@dataclass(frozen=True)
class FStartCond(Formula):
    context: str
    body: "Formula"


@dataclass(frozen=True)
class FEndCond(Formula):
    context: str
    body: "Formula"


@dataclass(frozen=True)
class FSalient(Formula):
    group: Group
    action: ActionExpr
    context: str


# ---------------------------------------------------------------------------
# plan patterns
# ---------------------------------------------------------------------------

class PlanPattern:
    __slots__ = ()


@dataclass(frozen=True)
class PPLeaf(PlanPattern):
    """One landmark: an action (None = the bare abstract achieving action)
    paired with the goal it is performed to reach."""

    action: Optional[ActionExpr]
    goal: Formula


@dataclass(frozen=True)
class PPSeq(PlanPattern):
    left: PlanPattern
    right: PlanPattern


@dataclass(frozen=True)
class PPChoice(PlanPattern):
    left: PlanPattern
    right: PlanPattern


@dataclass(frozen=True)
class PPPar(PlanPattern):
    left: PlanPattern
    right: PlanPattern


def pattern_leaves(pp: PlanPattern) -> list:
    if isinstance(pp, PPLeaf):
        return [pp]
    return pattern_leaves(pp.left) + pattern_leaves(pp.right)


def pattern_linearizations(pp: PlanPattern) -> list:
    """All leaf sequences a run may follow: choices pick one side, `&`
    contributes both orders, `;` concatenates."""
    if isinstance(pp, PPLeaf):
        return [(pp,)]
    if isinstance(pp, PPSeq):
        return [l + r for l in pattern_linearizations(pp.left)
                for r in pattern_linearizations(pp.right)]
    if isinstance(pp, PPChoice):
        return pattern_linearizations(pp.left) + pattern_linearizations(pp.right)
    if isinstance(pp, PPPar):
        out = []
        for l in pattern_linearizations(pp.left):
            for r in pattern_linearizations(pp.right):
                out.append(l + r)
                if l != r:
                    out.append(r + l)
        return out
    raise TypeError(pp)


def pattern_first_leaf(pp: PlanPattern) -> PPLeaf:
    """The leading landmark: the head of a sequence, or the pattern itself."""
    if isinstance(pp, PPSeq):
        return pattern_first_leaf(pp.left)
    if isinstance(pp, PPLeaf):
        return pp
    # for + and & the whole pattern counts as the start
    return pattern_leaves(pp)[0]


def pattern_seq_links(pp: PlanPattern) -> list:
    """Pairs of leaves that meet at a sequential juncture, over all
    linearizations (last leaf of the left part, first leaf of the right)."""
    links = []
    if isinstance(pp, PPLeaf):
        return links
    if isinstance(pp, PPSeq):
        for lin_l in pattern_linearizations(pp.left):
            for lin_r in pattern_linearizations(pp.right):
                pair = (lin_l[-1], lin_r[0])
                if pair not in links:
                    links.append(pair)
    for sub in (pp.left, pp.right):
        for pair in pattern_seq_links(sub):
            if pair not in links:
                links.append(pair)
    return links


# ---------------------------------------------------------------------------
# canonical printer
# ---------------------------------------------------------------------------

# action precedence: ~ (3) > & (2) > ; (1) > + (0)
_ACT_PREC = {ActChoice: 0, ActSeq: 1, ActPar: 2}
_EV_PREC = {EvChoice: 0, EvSeq: 1, EvPar: 2}


def _fmt_goal_arg(f: Formula) -> str:
    if isinstance(f, (FAtom, FBool)):
        return formula_to_src(f)
    return "(" + formula_to_src(f) + ")"


def action_to_src(a: ActionExpr, prec: int = 0) -> str:
    if isinstance(a, ActAtom):
        return a.name
    if isinstance(a, ActSkip):
        return "skip"
    if isinstance(a, ActAchieve):
        return "any->" + _fmt_goal_arg(a.goal)
    if isinstance(a, ActNeg):
        return "~" + action_to_src(a.body, 3)
    op, my = {ActChoice: (" + ", 0), ActSeq: (" ; ", 1), ActPar: (" & ", 2)}[type(a)]
    s = action_to_src(a.left, my) + op + action_to_src(a.right, my + 1)
    return "(" + s + ")" if my < prec else s


def group_to_src(g: Group) -> str:
    if g.is_role():
        return g.role
    return "{" + ", ".join(g.agents) + "}"


def event_to_src(e: EventExpr, prec: int = 0) -> str:
    if isinstance(e, EvAtom):
        act = e.action
        if isinstance(act, (ActAtom, ActSkip, ActAchieve)):
            body = action_to_src(act)
        else:
            body = "(" + action_to_src(act) + ")"
        return group_to_src(e.group) + ":" + body
    if isinstance(e, EvSkip):
        return "skip"
    if isinstance(e, EvNeg):
        inner = event_to_src(e.body, 3)
        if isinstance(e.body, EvAtom):
            inner = "(" + event_to_src(e.body) + ")"
        return "~" + inner
    op, my = {EvChoice: (" + ", 0), EvSeq: (" ; ", 1), EvPar: (" & ", 2)}[type(e)]
    s = event_to_src(e.left, my) + op + event_to_src(e.right, my + 1)
    return "(" + s + ")" if my < prec else s


# formula precedence: -> (1, right assoc) < | (2) < & (3) < unary (4)
def formula_to_src(f: Formula, prec: int = 0) -> str:
    if isinstance(f, FAtom):
        return f.name
    if isinstance(f, FBool):
        return "true" if f.value else "false"
    if isinstance(f, FNot):
        return "!" + formula_to_src(f.body, 4)
    if isinstance(f, FImp):
        s = formula_to_src(f.left, 2) + " -> " + formula_to_src(f.right, 1)
        return "(" + s + ")" if prec > 1 else s
    if isinstance(f, FOr):
        s = formula_to_src(f.left, 2) + " | " + formula_to_src(f.right, 3)
        return "(" + s + ")" if prec > 2 else s
    if isinstance(f, FAnd):
        s = formula_to_src(f.left, 3) + " & " + formula_to_src(f.right, 4)
        return "(" + s + ")" if prec > 3 else s
    if isinstance(f, FBox):
        return "[" + event_to_src(f.event) + "]" + formula_to_src(f.body, 4)
    if isinstance(f, FDiamond):
        return "<" + event_to_src(f.event) + ">" + formula_to_src(f.body, 4)
    if isinstance(f, FCap):
        return "Cap(%s, %s)" % (f.agent, action_to_src(f.action))
    if isinstance(f, FDone):
        return "DONE(" + event_to_src(f.event) + ")"
    if isinstance(f, FDo):
        return "DO(" + event_to_src(f.event) + ")"
    if isinstance(f, (FDonePart, FDoPart)):
        head = "DONE" if isinstance(f, FDonePart) else "DO"
        return "%s(%s, %s, %s:(%s))" % (
            head, f.agent, f.part, group_to_src(f.group), action_to_src(f.action))
    if isinstance(f, FBelief):
        return "B{%s}(%s)" % (f.agent, formula_to_src(f.body))
    if isinstance(f, FEveryoneBelieves):
        return "EB{%s}(%s)" % (", ".join(f.agents), formula_to_src(f.body))
    if isinstance(f, FCommonBelief):
        return "CB{%s}(%s)" % (", ".join(f.agents), formula_to_src(f.body))
    if isinstance(f, FGoal):
        return "Goal{%s}(%s)" % (f.agent, formula_to_src(f.body))
    if isinstance(f, FAbleAction):
        return "G{%s}[%s]" % (f.agent, action_to_src(f.action))
    if isinstance(f, FAbleFormula):
        return "G{%s}(%s)" % (f.agent, formula_to_src(f.body))
    if isinstance(f, FAttempt):
        return "H{%s}(%s)" % (f.agent, formula_to_src(f.body))
    if isinstance(f, FStit):
        return "E{%s}(%s)" % (f.agent, formula_to_src(f.body))
    if isinstance(f, FOblig):
        return "O(%s, %s)" % (event_to_src(f.event), f.violation)
    if isinstance(f, FForbid):
        return "F(%s, %s)" % (event_to_src(f.event), f.violation)
    if isinstance(f, FPerm):
        return "P(%s, %s)" % (event_to_src(f.event), f.violation)
    if isinstance(f, FNormRule):
        if f.sanction is None:
            return "%s(%s, %s, %s, %s)" % (
                f.flavor, f.role, formula_to_src(f.condition),
                action_to_src(f.action), f.violation)
        return "%s(%s, %s, %s, %s, %s)" % (
            f.flavor, f.role, formula_to_src(f.condition),
            action_to_src(f.action), action_to_src(f.sanction), f.violation)
    if isinstance(f, FPurpose):
        goal = formula_to_src(f.goal)
        if f.variant == "practice":
            return "purpose(%s, %s)" % (f.context, goal)
        act = action_to_src(f.action)
        if f.variant == "basic":
            return "purpose(%s:%s, %s, %s)" % (f.subject, act, f.context, goal)
        if f.variant == "general":
            return "purpose(%s, %s, %s)" % (act, f.context, goal)
        if f.variant == "group":
            subj = "{" + ", ".join(f.subject) + "}"
        else:  # complex / role
            subj = f.subject
        return "purpose(%s, %s, %s, %s)" % (subj, act, f.context, goal)
    if isinstance(f, FStrategy):
        return "strategy(%s, %s, %s)" % (
            formula_to_src(f.condition), formula_to_src(f.consequent), f.context)
    if isinstance(f, FCountsAs):
        return "countsas(%s, %s:%s, %s)" % (
            f.context, f.role, action_to_src(f.concrete),
            action_to_src(f.institutional))
    if isinstance(f, FPromotes):
        head = "demotes" if f.demotes else "promotes"
        return "%s(%s, %s:%s, %s)" % (
            head, f.context, f.role, action_to_src(f.action), f.value)
    if isinstance(f, FAffords):
        return "affords({%s}, %s, %s)" % (", ".join(f.objects), f.action, f.context)
    if isinstance(f, FAvailable):
        return "available({%s}, %s)" % (", ".join(f.objects), f.context)
    if isinstance(f, FPlay):
        if f.context is None:
            return "play(%s, %s)" % (f.agent, f.role)
        return "play(%s, %s, %s)" % (f.agent, f.role, f.context)
    if isinstance(f, FActive):
        return "active(%s)" % f.context
    if isinstance(f, FStartCond):
        return "SC(%s, %s)" % (f.context, formula_to_src(f.body))
    if isinstance(f, FEndCond):
        return "EC(%s, %s)" % (f.context, formula_to_src(f.body))
    if isinstance(f, FSalient):
        return "Salient(%s:%s, %s)" % (
            group_to_src(f.group), action_to_src(f.action), f.context)
    raise TypeError("unknown formula node %r" % (f,))


# plan pattern precedence mirrors the action operators
def pattern_to_src(pp: PlanPattern, prec: int = 0) -> str:
    if isinstance(pp, PPLeaf):
        if pp.action is None:
            return "[any -> %s]" % formula_to_src(pp.goal)
        return "[%s -> %s]" % (action_to_src(pp.action), formula_to_src(pp.goal))
    op, my = {PPChoice: (" + ", 0), PPSeq: (" ; ", 1), PPPar: (" & ", 2)}[type(pp)]
    s = pattern_to_src(pp.left, my) + op + pattern_to_src(pp.right, my + 1)
    return "(" + s + ")" if my < prec else s
