"""Bitmask evaluation kernel shared by the world-view engines.

Encoding over a signature of ``n`` atoms:

* an interpretation is an int in ``range(2**n)`` (bit ``i`` = atom ``i``);
* a set of interpretations (a total belief view, or the extension of a
  formula) is an int with ``2**n`` bits;
* for a fixed there-world ``T`` the here-worlds ``H`` that satisfy a formula
  form a mask over the same ``2**n`` positions, restricted to subsets of T.

Minimality searches never enumerate non-total views explicitly.  A smaller
view ``W'`` with ``W'^t = W`` is described by the truth value it assigns to
every K-subformula (its *profile*).  Under a fixed profile every HT pair is
evaluated independently of the other members of ``W'``, so the question
"does some consistent ``W'`` exist" reduces to per-there-world masks plus a
witness condition for the K-subformulas the profile makes false.  By HT
persistence a profile can only turn true K-subformulas of ``W`` false, and
K-subformulas whose body is rigid (here-value equals there-value) cannot
change at all.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator

from .core import And, Atom, Bot, EnumerationCapError, Formula, Implies, K, Or

BOT_, ATOM_, AND_, OR_, IMP_, K_ = range(6)

# Full scans of 2**(2**n) candidate views are allowed up to this size.
SCAN_LIMIT = 1 << 17


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(x: int) -> Iterator[int]:
    """Positions of set bits, ascending."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def submasks(mask: int) -> Iterator[int]:
    """Non-empty submasks of ``mask``."""
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


class Space:
    def __init__(self, sig: tuple[str, ...]):
        self.sig = tuple(sig)
        self.n = len(self.sig)
        self.size = 1 << self.n
        self.full = (1 << self.size) - 1
        self.index = {a: i for i, a in enumerate(self.sig)}
        self.atom_ext = []
        for i in range(self.n):
            m = 0
            for j in range(self.size):
                if j >> i & 1:
                    m |= 1 << j
            self.atom_ext.append(m)
        self.subsets = []
        for t in range(self.size):
            m = 1  # the empty set is a subset of everything
            for h in submasks(t):
                m |= 1 << h
            self.subsets.append(m)

    def interp(self, names: Iterable[str]) -> int:
        t = 0
        for a in names:
            t |= 1 << self.index[a]
        return t

    def names(self, t: int) -> frozenset[str]:
        return frozenset(self.sig[i] for i in range(self.n) if t >> i & 1)

    def view_mask(self, view: Iterable[Iterable[str]]) -> int:
        w = 0
        for t in view:
            w |= 1 << self.interp(t)
        return w

    def view(self, w: int) -> frozenset[frozenset[str]]:
        return frozenset(self.names(t) for t in bits(w))


@lru_cache(maxsize=64)
def space(sig: tuple[str, ...]) -> Space:
    return Space(sig)


class Compiled:
    """A theory hash-consed into a DAG of nodes over a ``Space``.

    Node arrays are in topological order (children first).
    """

    def __init__(self, formulas: tuple[Formula, ...], sp: Space):
        self.sp = sp
        self.kind: list[int] = []
        self.arg: list[tuple[int, ...]] = []
        self._ids: dict[Formula, int] = {}
        self.roots = tuple(self._intern(f) for f in formulas)
        nn = len(self.kind)

        self.objective = [True] * nn
        self.rigid = [False] * nn
        for i in range(nn):
            k, a = self.kind[i], self.arg[i]
            if k == K_:
                self.objective[i] = False
            elif k in (AND_, OR_, IMP_):
                self.objective[i] = self.objective[a[0]] and self.objective[a[1]]
            if k == BOT_:
                self.rigid[i] = True
            elif k in (AND_, OR_):
                self.rigid[i] = self.rigid[a[0]] and self.rigid[a[1]]
            elif k == IMP_:
                self.rigid[i] = self.rigid[a[1]]

        # classical extensions of objective nodes do not depend on the view
        full = sp.full
        self.const: list[int | None] = [None] * nn
        for i in range(nn):
            if self.objective[i]:
                self.const[i] = self._classical(i, self.const, None, None)

        self.knodes = tuple(i for i in range(nn) if self.kind[i] == K_)
        kpos = {k: j for j, k in enumerate(self.knodes)}
        self.kpos = kpos
        # K nodes reachable from a root without crossing another K
        top: set[int] = set()
        stack = list(self.roots)
        seen: set[int] = set()
        while stack:
            i = stack.pop()
            if i in seen:
                continue
            seen.add(i)
            if self.kind[i] == K_:
                top.add(i)
            elif self.kind[i] != ATOM_:  # an atom's arg is its bit, not a node
                stack.extend(self.arg[i])
        self.top_knodes = tuple(sorted(top))
        # nodes reachable from roots, not descending into K bodies
        self.top_nodes = tuple(sorted(seen))
        self.nested = len(self.top_knodes) != len(self.knodes) or any(
            not self.objective[self.arg[k][0]] for k in self.knodes
        )
        self._body_neg = {
            k: full & ~self.const[self.arg[k][0]]
            for k in self.knodes
            if self.objective[self.arg[k][0]]
        }
        self._mcache: dict[tuple[bool, ...], int] = {}

    def _intern(self, f: Formula) -> int:
        i = self._ids.get(f)
        if i is not None:
            return i
        if isinstance(f, Bot):
            k, a = BOT_, ()
        elif isinstance(f, Atom):
            k, a = ATOM_, (self.sp.index[f.name],)
        elif isinstance(f, And):
            k, a = AND_, (self._intern(f.left), self._intern(f.right))
        elif isinstance(f, Or):
            k, a = OR_, (self._intern(f.left), self._intern(f.right))
        elif isinstance(f, Implies):
            k, a = IMP_, (self._intern(f.left), self._intern(f.right))
        elif isinstance(f, K):
            k, a = K_, (self._intern(f.body),)
        else:
            raise TypeError(f"not a formula: {f!r}")
        i = len(self.kind)
        self.kind.append(k)
        self.arg.append(a)
        self._ids[f] = i
        return i

    def _classical(self, i, ext, w, kval) -> int:
        """Extension of node ``i`` given children extensions in ``ext``.

        K nodes take ``kval[i]`` when given, otherwise are evaluated on ``w``.
        """
        k, a = self.kind[i], self.arg[i]
        full = self.sp.full
        if k == BOT_:
            return 0
        if k == ATOM_:
            return self.sp.atom_ext[a[0]]
        if k == AND_:
            return ext[a[0]] & ext[a[1]]
        if k == OR_:
            return ext[a[0]] | ext[a[1]]
        if k == IMP_:
            return (full & ~ext[a[0]]) | ext[a[1]]
        if kval is not None:
            return full if kval[i] else 0
        return full if w & ~ext[a[0]] == 0 else 0

    # -- S5 level -----------------------------------------------------------

    def s5(self, w: int) -> list[int]:
        """Classical extension of every node over the total view ``w``."""
        ext = list(self.const)
        for i in range(len(ext)):
            if ext[i] is None:
                ext[i] = self._classical(i, ext, w, None)
        return ext

    def model_mask(self, w: int) -> int:
        """Interpretations J with <J|w> satisfying every formula."""
        ext = self.s5(w)
        m = self.sp.full
        for r in self.roots:
            m &= ext[r]
        return m

    def profile(self, w: int) -> tuple[bool, ...]:
        """Truth values at ``w`` of the K-subformulas occurring at top level."""
        if not self.nested:
            neg = self._body_neg
            return tuple(w & neg[k] == 0 for k in self.top_knodes)
        ext = self.s5(w)
        return tuple(ext[k] != 0 for k in self.top_knodes)

    def _profile_ext(self, prof: tuple[bool, ...]) -> list:
        kval = dict(zip(self.top_knodes, prof))
        ext = list(self.const)
        for i in self.top_nodes:
            if ext[i] is None:
                ext[i] = self._classical(i, ext, None, kval)
        return ext

    def reduct_models(self, prof: tuple[bool, ...]) -> int:
        """Classical models of the theory with top-level K fixed by ``prof``."""
        m = self._mcache.get(prof)
        if m is None:
            ext = self._profile_ext(prof)
            m = self.sp.full
            for r in self.roots:
                m &= ext[r]
            self._mcache[prof] = m
        return m

    def reduct_stable_models(self, prof: tuple[bool, ...]) -> int:
        """Stable models of the objective reduct fixed by ``prof``."""
        ext = self._profile_ext(prof)
        models = self.sp.full
        for r in self.roots:
            models &= ext[r]
        kval = dict(zip(self.top_knodes, prof))
        out = 0
        for t in bits(models):
            hm = self._here(t, ext, kval, self.top_nodes)
            sat = self.sp.subsets[t]
            for r in self.roots:
                sat &= hm[r]
            if sat == 1 << t:
                out |= 1 << t
        return out

    # -- HT level -----------------------------------------------------------

    def _here(self, t: int, there: list, kval: dict, nodes) -> dict:
        """Here-masks (unrestricted, caller masks with subsets[t]) for ``nodes``.

        ``there`` holds classical extensions used for the there-level test of
        implications; K nodes take their here value from ``kval``.
        """
        full = self.sp.full
        hm: dict[int, int] = {}
        kind, arg = self.kind, self.arg
        for i in nodes:
            k = kind[i]
            if k == BOT_:
                hm[i] = 0
            elif k == ATOM_:
                hm[i] = self.sp.atom_ext[arg[i][0]]
            elif k == AND_:
                hm[i] = hm[arg[i][0]] & hm[arg[i][1]]
            elif k == OR_:
                hm[i] = hm[arg[i][0]] | hm[arg[i][1]]
            elif k == IMP_:
                if there[i] >> t & 1:
                    hm[i] = (full & ~hm[arg[i][0]]) | hm[arg[i][1]]
                else:
                    hm[i] = 0
            else:
                hm[i] = full if kval[i] else 0
        return hm

    # -- candidate generation ---------------------------------------------

    def epistemic_models(self) -> Iterator[int]:
        """All non-empty total views w with w ⊆ model_mask(w)."""
        tk = self.top_knodes
        total = 0
        profiles = []
        if len(tk) <= 16:
            for prof in product((False, True), repeat=len(tk)):
                m = self.reduct_models(prof)
                if m:
                    profiles.append((prof, m))
                    total += (1 << popcount(m)) - 1
                if total > self.sp.full:
                    break
        if len(tk) <= 16 and total <= self.sp.full:
            for prof, m in profiles:
                for w in submasks(m):
                    if self.profile(w) == prof:
                        yield w
            return
        if self.sp.full > SCAN_LIMIT:
            raise EnumerationCapError(
                f"{self.sp.n} atoms: too many candidate views to enumerate"
            )
        for w in range(1, self.sp.full + 1):
            if w & ~self.reduct_models(self.profile(w)) == 0:
                yield w

    def _candidate_worlds(self, prof: tuple[bool, ...], mode: str) -> int:
        """Worlds that can belong to a view with top-level profile ``prof``.

        ``fixpoint``: a member T needs <T|W> to be an equilibrium, and the
        belief-total <W,H,T> with H ⊂ T is below it, so T must be a stable
        model of the reduct.  ``minimal`` (objective K bodies only): if some
        H ⊂ T satisfies the reduct and the bodies of the true K's, adding
        <H,T> (or swapping it in for <T,T>) yields a smaller epistemic model
        with the same K values, by persistence for the false ones.
        """
        if mode == "fixpoint":
            return self.reduct_stable_models(prof)
        ext = self._profile_ext(prof)
        kval = dict(zip(self.top_knodes, prof))
        models = self.reduct_models(prof)
        bodies = [self.arg[k][0] for k, v in kval.items() if v]
        for b in bodies:
            models &= self.const[b]
        out = 0
        nodes = range(len(self.kind))
        for t in bits(models):
            hm = self._here(t, ext, kval, nodes)
            sat = self.sp.subsets[t]
            for r in self.roots:
                sat &= hm[r]
            for b in bodies:
                sat &= hm[b]
            if sat == 1 << t:
                out |= 1 << t
        return out

    def candidate_views(self, mode: str) -> Iterator[int]:
        """Epistemic models that survive the per-world necessary condition
        of ``mode`` (see ``_candidate_worlds``)."""
        tk = self.top_knodes
        if len(tk) > 16 or (mode == "minimal" and self.nested):
            yield from self.epistemic_models()
            return
        for prof in product((False, True), repeat=len(tk)):
            base = self._candidate_worlds(prof, mode) & self.reduct_models(prof)
            for w in submasks(base):
                if w and self.profile(w) == prof:
                    yield w

    def g91_views(self) -> Iterator[int]:
        for prof in product((False, True), repeat=len(self.top_knodes)):
            w = self.reduct_stable_models(prof)
            if w and self.profile(w) == prof:
                yield w


class ViewContext:
    """Minimality searches below a fixed total view ``w``."""

    def __init__(self, c: Compiled, w: int):
        self.c = c
        self.w = w
        self.ext = c.s5(w)
        self.members = tuple(bits(w))
        self.models = c.sp.full
        for r in c.roots:
            self.models &= self.ext[r]
        self.kval = {k: self.ext[k] != 0 for k in c.knodes}
        self.flippable = tuple(
            k for k in c.knodes if self.kval[k] and not c.rigid[c.arg[k][0]]
        )
        self._hcache: dict = {}
        self._all_nodes = range(len(c.kind))

    @property
    def is_model(self) -> bool:
        return self.w & ~self.models == 0

    def profiles(self, belief_total: bool = False) -> Iterator[frozenset[int]]:
        """Sets of K nodes flipped to false, smallest first."""
        yield frozenset()
        if belief_total:
            return
        fl = self.flippable
        for size in range(1, len(fl) + 1):
            for combo in combinations(fl, size):
                yield frozenset(combo)

    def here(self, t: int, flipped: frozenset[int]) -> dict:
        key = (t, flipped)
        hm = self._hcache.get(key)
        if hm is None:
            kval = self.kval
            if flipped:
                kval = dict(kval)
                for k in flipped:
                    kval[k] = False
            hm = self.c._here(t, self.ext, kval, self._all_nodes)
            self._hcache[key] = hm
        return hm

    def _real_allowed(self, t: int, flipped) -> int:
        hm = self.here(t, flipped)
        m = self.c.sp.subsets[t]
        for r in self.c.roots:
            m &= hm[r]
        return m

    def _view_allowed(self, t: int, flipped) -> int:
        c = self.c
        hm = self.here(t, flipped)
        m = self._real_allowed(t, flipped)
        for k in c.knodes:
            if self.kval[k] and k not in flipped:
                m &= hm[c.arg[k][0]]
        return m

    def _false_knodes(self, flipped) -> list[int]:
        return [k for k in self.c.knodes if not self.kval[k] or k in flipped]

    def smaller_view(self, flipped) -> tuple[bool, bool]:
        """For the profile ``flipped``: (some consistent W' with W'^t = W
        exists, the maximal such W' contains a non-total pair)."""
        c = self.c
        false_k = self._false_knodes(flipped)
        missing = set(false_k)
        nontotal = False
        for t in self.members:
            allowed = self._view_allowed(t, flipped)
            if not allowed:
                return False, False
            if allowed & ~(1 << t):
                nontotal = True
            if missing:
                hm = self.here(t, flipped)
                for k in list(missing):
                    if allowed & ~hm[c.arg[k][0]]:
                        missing.discard(k)
        if missing:
            return False, False
        return True, nontotal

    def feel_minimal(self) -> bool:
        """No epistemic model strictly below the (total) view."""
        for flipped in self.profiles():
            ok, nontotal = self.smaller_view(flipped)
            if ok and nontotal:
                return False
        return True

    def simple_minimal(self) -> bool:
        """No simple epistemic model strictly below the (total) view."""
        c = self.c
        for flipped in self.profiles():
            # only non-rigid false K nodes need an explicit witness; a rigid
            # body fails at every here-world of a there-world failing it
            false_k = [k for k in self._false_knodes(flipped) if not c.rigid[c.arg[k][0]]]
            goal = (1 << len(false_k)) - 1
            states = {(0, False)}
            for t in self.members:
                allowed = self._view_allowed(t, flipped)
                if not allowed:
                    states = set()
                    break
                hm = self.here(t, flipped)
                options = set()
                for h in bits(allowed):
                    m = 0
                    for j, k in enumerate(false_k):
                        if not hm[c.arg[k][0]] >> h & 1:
                            m |= 1 << j
                    options.add((m, h != t))
                states = {(sm | om, sf or of) for sm, sf in states for om, of in options}
            if (goal, True) in states:
                return False
        return True

    def equilibrium(self, t: int, belief_total: bool = False) -> bool:
        """Is <t | w> an (weak, if ``belief_total``) equilibrium belief model?"""
        if not self.is_model or not self.models >> t & 1:
            return False
        for flipped in self.profiles(belief_total):
            if belief_total:
                ok, nontotal = True, False
            else:
                ok, nontotal = self.smaller_view(flipped)
            if not ok:
                continue
            real = self._real_allowed(t, flipped)
            if not real:
                continue
            if nontotal or real & ~(1 << t):
                return False
        return True

    def autoepistemic_fixpoint(self, belief_total: bool = False) -> bool:
        """w == {T : <T|w> is an (weak) equilibrium belief model}."""
        if not self.is_model:
            return False
        for t in self.members:
            if not self.equilibrium(t, belief_total):
                return False
        for t in bits(self.models & ~self.w):
            if self.equilibrium(t, belief_total):
                return False
        return True


@lru_cache(maxsize=256)
def compile_theory(formulas: tuple[Formula, ...], sig: tuple[str, ...]) -> Compiled:
    return Compiled(formulas, space(sig))


def check_cap(sig: tuple[str, ...], cap: int | None) -> None:
    if cap is not None and len(sig) > cap:
        raise EnumerationCapError(
            f"signature has {len(sig)} atoms; enumeration cap is {cap}"
        )


def sort_views(views: Iterable[frozenset[frozenset[str]]]) -> list[frozenset[frozenset[str]]]:
    return sorted(set(views), key=view_key)


def interp_key(t: Iterable[str]) -> tuple:
    s = sorted(t)
    return (len(s), s)


def view_key(w) -> tuple:
    members = sorted((sorted(t) for t in w), key=lambda s: (len(s), s))
    return (len(members), members)
