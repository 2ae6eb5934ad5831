"""SCC decomposition, depth bundles, and the bottom-up maximally-proper engine.

Arguments are grouped into strongly connected components of the attack graph.
A component's depth is 0 when nothing outside it attacks it, and otherwise one
more than the deepest external attacking argument; bundle(d) collects the
arguments of depth d. Every external attacker of a depth-d argument sits at a
strictly smaller depth, so bundles can be solved in depth order: freeze the
labels chosen below, shift the bundle's tuples to absorb the frozen attackers,
solve the reduced sub-framework, and branch over its solutions.

Composing per-depth solutions is not sufficient on its own, in two ways. A
leaf of that search can be pre-maximally proper without being maximally proper
(its properly labelled set can be dominated by another leaf's), so the engine
keeps each leaf's proper set. And the union of the leaves' proper sets can
itself fall short: a locally dominated choice, invisible to the leaf walk, can
make an argument proper that no composition of locally maximal choices covers,
in which case no maximally proper labelling exists at all. The engine therefore
computes the union of proper sets over all pre-maximally proper labellings by a
separate frontier-indexed walk and retains exactly the leaves attaining that
union, raising when none does.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FrozenLabelMissingError, MayMustError, NoMaximallyProperError
from .framework import Framework, NuanceTuple
from .labels import Label, Labelling, restrict
from .semantics import (
    SemanticsResult,
    maximally_proper_semantics,
    premax_proper_sets,
    sort_canonical,
)


def _tarjan(n: int, succ: list[list[int]]) -> list[list[int]]:
    """Iterative Tarjan; returns components as lists of vertex indices."""
    counter = 0
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, edge_i = work[-1]
            if edge_i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            descended = False
            for i in range(edge_i, len(succ[v])):
                w = succ[v][i]
                if index[w] == -1:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


@dataclass(frozen=True)
class SccInfo:
    """Components (each a tuple of ids in declaration order), aligned depths."""

    components: tuple[tuple[str, ...], ...]
    depths: tuple[int, ...]

    @property
    def max_depth(self) -> int:
        return max(self.depths, default=-1)

    def depth_of(self, arg_id: str) -> int:
        for comp, depth in zip(self.components, self.depths):
            if arg_id in comp:
                return depth
        raise KeyError(arg_id)

    def bundle(self, depth: int) -> tuple[str, ...]:
        out = []
        for comp, d in zip(self.components, self.depths):
            if d == depth:
                out.extend(comp)
        return tuple(out)

    def bundles(self) -> tuple[tuple[str, ...], ...]:
        return tuple(self.bundle(d) for d in range(self.max_depth + 1))


def compute_sccs(f: Framework) -> SccInfo:
    succ: list[list[int]] = [[] for _ in range(f.n)]
    for src, dst in f.attacks:
        succ[src].append(dst)
    raw = _tarjan(f.n, succ)
    raw.sort(key=min)  # deterministic order independent of traversal
    comp_of = [0] * f.n
    for ci, comp in enumerate(raw):
        for v in comp:
            comp_of[v] = ci

    # depth DP over the condensation, attackers before the components they hit
    attackers_of_comp: list[set[int]] = [set() for _ in raw]
    fanout: list[set[int]] = [set() for _ in raw]
    for src, dst in f.attacks:
        cs, cd = comp_of[src], comp_of[dst]
        if cs != cd:
            attackers_of_comp[cd].add(cs)
            fanout[cs].add(cd)
    pending = [len(s) for s in attackers_of_comp]
    ready = [ci for ci, p in enumerate(pending) if p == 0]
    depths = [0] * len(raw)
    order = []
    while ready:
        ci = ready.pop()
        order.append(ci)
        if attackers_of_comp[ci]:
            depths[ci] = 1 + max(depths[cj] for cj in attackers_of_comp[ci])
        for cj in fanout[ci]:
            pending[cj] -= 1
            if pending[cj] == 0:
                ready.append(cj)
    if len(order) != len(raw):
        raise MayMustError("condensation was not acyclic; SCC computation is broken")

    components = tuple(tuple(f.ids[v] for v in sorted(comp)) for comp in raw)
    return SccInfo(components, tuple(depths))


def conservative_reduction(f: Framework, keep, frozen: Labelling) -> Framework:
    """Project f onto the kept arguments, absorbing frozen external attackers.

    Each kept argument's acceptance entries drop by its number of OUT-frozen
    external attackers and its rejection entries by the IN-frozen ones (UNDEC
    attackers vanish without a shift), clamped at zero. The frozen labelling
    must cover every external attacker of a kept argument.
    """
    keep_set = set(keep)
    kept_ids = [a for a in f.ids if a in keep_set]
    arguments = []
    for a in kept_ids:
        shift_out = shift_in = 0
        for att in f.attackers_of(a):
            if att in keep_set:
                continue
            try:
                lab = frozen[att]
            except KeyError:
                raise FrozenLabelMissingError(
                    f"external attacker {att!r} of {a!r} has no frozen label"
                ) from None
            if lab is Label.OUT:
                shift_out += 1
            elif lab is Label.IN:
                shift_in += 1
        t = f.tuple_of(a)
        arguments.append(
            (
                a,
                NuanceTuple(
                    max(0, t.acc_may - shift_out),
                    max(0, t.acc_must - shift_out),
                    max(0, t.rej_may - shift_in),
                    max(0, t.rej_must - shift_in),
                ),
            )
        )
    attacks = [
        (f.ids[s], f.ids[d])
        for s, d in f.attacks
        if f.ids[s] in keep_set and f.ids[d] in keep_set
    ]
    return Framework(arguments, attacks)


@dataclass(frozen=True)
class DecompositionProbe:
    """Everything the bundle-wise search saw, for cross-checking the engine.

    theta_sets[d] is the union, over every reachable combination of choices
    below depth d, of the reduced bundle-d solution sets. restriction_sets[d]
    is the final result restricted to bundle d. The restriction sets are
    always included in the theta sets; the reverse inclusion can genuinely
    fail (a locally maximal choice can be dominated once later bundles are
    taken into account), which is why the engine filters leaves globally
    instead of trusting per-depth maximality.
    """

    result: SemanticsResult
    bundles: tuple[tuple[str, ...], ...]
    theta_sets: tuple[frozenset[Labelling], ...]
    restriction_sets: tuple[frozenset[Labelling], ...]

    @property
    def restrictions_within_theta(self) -> bool:
        return all(r <= t for r, t in zip(self.restriction_sets, self.theta_sets))

    @property
    def theta_equal(self) -> bool:
        return all(r == t for r, t in zip(self.restriction_sets, self.theta_sets))


def _walk_bundles(f: Framework) -> DecompositionProbe:
    info = compute_sccs(f)
    bundles = info.bundles()
    depth_count = len(bundles)

    externals: list[tuple[str, ...]] = []
    for bundle in bundles:
        bundle_set = set(bundle)
        ext = {
            att
            for a in bundle
            for att in f.attackers_of(a)
            if att not in bundle_set
        }
        externals.append(tuple(sorted(ext, key=f.index.__getitem__)))

    # per (depth, frozen boundary labels): solutions of the reduced bundle
    memo: dict[tuple, list[tuple[Labelling, frozenset[str]]]] = {}
    theta_union: list[set[Labelling]] = [set() for _ in bundles]
    leaves: list[tuple[dict[str, Label], frozenset[str]]] = []

    def solutions(depth: int, chosen: dict[str, Label]):
        boundary = tuple((x, chosen[x]) for x in externals[depth])
        key = (depth, boundary)
        if key not in memo:
            reduced = conservative_reduction(f, bundles[depth], Labelling(dict(boundary)))
            try:
                res = maximally_proper_semantics(reduced)
            except NoMaximallyProperError:
                # no locally maximal choice under this boundary at all; the
                # path dies, but other boundaries may still carry leaves
                memo[key] = []
            else:
                memo[key] = [(l, res.proper_set) for l in res.labellings]
        return memo[key]

    def walk(depth: int, chosen: dict[str, Label], proper: frozenset[str]):
        if depth == depth_count:
            leaves.append((dict(chosen), proper))
            return
        for part, part_proper in solutions(depth, chosen):
            theta_union[depth].add(part)
            for a, lab in part.items():
                chosen[a] = lab
            walk(depth + 1, chosen, proper | part_proper)
            for a in part:
                del chosen[a]

    walk(0, {}, frozenset())

    # Target of the maximality filter: the union of proper sets over ALL
    # pre-maximally proper labellings, not just over the leaves above. By
    # designation conservation a labelling is pre-maximally proper exactly
    # when each per-depth restriction is, against the boundary it induces,
    # so the union decomposes over a walk branching on pre-maximal (rather
    # than locally maximal) bundle solutions. Of the already chosen labels
    # only those of arguments attacking this or a deeper bundle influence
    # the subtree, which keys the memo.
    arg_depth = {a: d for d, bundle in enumerate(bundles) for a in bundle}
    relevant: set[str] = set()
    frontier_args: list[tuple[str, ...]] = [()] * (depth_count + 1)
    for depth in range(depth_count - 1, -1, -1):
        relevant |= set(externals[depth])
        frontier_args[depth] = tuple(
            sorted(
                (a for a in relevant if arg_depth[a] < depth),
                key=f.index.__getitem__,
            )
        )

    premax_memo: dict[tuple, list[tuple[Labelling, frozenset[str]]]] = {}
    union_memo: dict[tuple, frozenset[str]] = {}

    def premax_solutions(depth: int, chosen: dict[str, Label]):
        boundary = tuple((x, chosen[x]) for x in externals[depth])
        key = (depth, boundary)
        if key not in premax_memo:
            reduced = conservative_reduction(f, bundles[depth], Labelling(dict(boundary)))
            premax_memo[key] = list(premax_proper_sets(reduced))
        return premax_memo[key]

    def premax_union(depth: int, chosen: dict[str, Label]) -> frozenset[str]:
        if depth == depth_count:
            return frozenset()
        key = (depth, tuple(chosen[x] for x in frontier_args[depth]))
        if key not in union_memo:
            union: frozenset[str] = frozenset()
            for part, part_proper in premax_solutions(depth, chosen):
                for a, lab in part.items():
                    chosen[a] = lab
                union |= part_proper | premax_union(depth + 1, chosen)
                for a in part:
                    del chosen[a]
            union_memo[key] = union
        return union_memo[key]

    union = premax_union(0, {})
    final = [Labelling(chosen) for chosen, proper in leaves if proper == union]
    if not final:
        from .mmaf import serialize_mmaf  # local import: mmaf depends on framework

        raise NoMaximallyProperError(
            "no labelling attains the union of proper sets; instance:\n"
            + serialize_mmaf(f)
        )

    labellings = sort_canonical(f, final)
    result = SemanticsResult("maxi-complete", "scc", labellings, union)
    restriction_sets = tuple(
        frozenset(restrict(l, bundle) for l in labellings) for bundle in bundles
    )
    probe = DecompositionProbe(
        result, bundles, tuple(frozenset(t) for t in theta_union), restriction_sets
    )
    if not probe.restrictions_within_theta:
        # cannot happen by construction; a violation means the walk is broken
        raise MayMustError("bottom-up engine produced a restriction outside its own search")
    return probe


def bottom_up_maxi(f: Framework) -> SemanticsResult:
    """Maximally proper labellings assembled bundle-by-bundle.

    Branches over every combination of per-depth solutions, then keeps the
    composed labellings whose overall proper set attains the union of proper
    sets over all pre-maximally proper labellings; that filter is what makes
    the result globally, not just locally, maximal. Raises
    NoMaximallyProperError when no composition attains the union. Use
    decomposition_probe to inspect the per-depth solution sets.
    """
    if f.n == 0:
        return SemanticsResult("maxi-complete", "scc", (Labelling(),), frozenset())
    return _walk_bundles(f).result


def decomposition_probe(f: Framework) -> DecompositionProbe:
    """Run the bundle-wise search and report its per-depth solution sets."""
    if f.n == 0:
        result = SemanticsResult("maxi-complete", "scc", (Labelling(),), frozenset())
        return DecompositionProbe(result, (), (), ())
    return _walk_bundles(f)
