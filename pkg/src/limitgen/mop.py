"""Token-by-token generator machines and decidable support membership.

A token machine emits one token per step, reading at most a declared
number of random bits, until it emits the end-of-string marker.  Support
membership of any string is decided by enumerating the bit assignments of
each step; a brute-force enumerator of the whole bounded-length support
serves as the independent test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import BitBoundExceeded, DiscoveryCap, IterationCap
from .generate import Generator

EOS = "<EOS>"


class _OutOfBits(Exception):
    """Internal: a step tried to read past the supplied bit tape."""


class TapeBits:
    """Sequential reader over a fixed bit assignment."""

    def __init__(self, assignment):
        self.assignment = tuple(assignment)
        self.pos = 0

    def read(self) -> int:
        if self.pos >= len(self.assignment):
            raise _OutOfBits
        bit = self.assignment[self.pos]
        self.pos += 1
        return bit


class RngBits:
    """Reader drawing fair bits from an rng, enforcing a per-step bound."""

    def __init__(self, rng, bound):
        self.rng = rng
        self.bound = bound
        self.used = 0

    def read(self) -> int:
        if self.used >= self.bound:
            raise BitBoundExceeded(f"step read more than {self.bound} bits")
        self.used += 1
        return int(self.rng.random() < 0.5)


@dataclass(frozen=True)
class TokenMachine:
    """A halting next-token sampler.

    ``step(prefix, aux, bits)`` returns the next token (possibly EOS) and
    the new auxiliary state; it may read at most ``bit_bound`` random bits
    through ``bits.read()``.  Auxiliary states must be hashable so sets of
    reachable states stay computable; the initial state is ``None``.
    ``max_len`` caps brute-force support enumeration in tests.
    """

    name: str
    tokens: tuple[str, ...]
    step: Callable
    bit_bound: int
    max_len: int = 8


@dataclass(frozen=True)
class SupportVerdict:
    """Yes/No support answer; Yes carries a replayable per-step witness."""

    answer: bool
    witness: Optional[tuple[tuple[int, ...], ...]] = None


def _step_outcomes(machine: TokenMachine, prefix, aux):
    """All (token, new_aux) pairs reachable in one step, with one witness
    bit assignment each (2^bit_bound assignments enumerated)."""
    outcomes = {}
    for code in range(1 << machine.bit_bound):
        bits = tuple((code >> k) & 1 for k in range(machine.bit_bound))
        tape = TapeBits(bits)
        try:
            token, new_aux = machine.step(prefix, aux, tape)
        except _OutOfBits:
            raise BitBoundExceeded(
                f"{machine.name}: step read more than {machine.bit_bound} bits")
        key = (token, new_aux)
        if key not in outcomes:
            outcomes[key] = bits[:tape.pos]
    return outcomes


def mop_decide(machine: TokenMachine, s: str, prefix_mode: bool = False) -> SupportVerdict:
    """Decide whether ``s`` is in the machine's support.

    Walks the string token by token, tracking the set of reachable
    auxiliary states; answers No at the first unreachable position.  In
    complete mode the string must be followed by a reachable EOS emission;
    ``prefix_mode`` instead asks whether some output extends ``s``.
    """
    tokens = tuple(s)
    # layers[t] maps reachable aux after t tokens -> (parent aux, bits used)
    layers = [{None: (None, ())}]
    for t, want in enumerate(tokens):
        layer = {}
        for aux, _ in layers[t].items():
            for (token, new_aux), bits in _step_outcomes(machine, tokens[:t], aux).items():
                if token == want and new_aux not in layer:
                    layer[new_aux] = (aux, bits)
        if not layer:
            return SupportVerdict(False)
        layers.append(layer)

    end_aux, end_bits = None, None
    if not prefix_mode:
        for aux in layers[-1]:
            for (token, _), bits in _step_outcomes(machine, tokens, aux).items():
                if token == EOS:
                    end_aux, end_bits = aux, bits
                    break
            if end_bits is not None:
                break
        if end_bits is None:
            return SupportVerdict(False)

    # Backtrack one consistent path of per-step bit assignments.
    path = []
    aux = end_aux if not prefix_mode else next(iter(layers[-1]))
    for t in range(len(tokens), 0, -1):
        parent, bits = layers[t][aux]
        path.append(bits)
        aux = parent
    path.reverse()
    if not prefix_mode:
        path.append(end_bits)
    return SupportVerdict(True, tuple(path))


def support_bruteforce(machine: TokenMachine, max_len: int) -> set[str]:
    """Every completed output of length <= max_len, by exhaustive
    enumeration of all per-step bit assignments."""
    if max_len > machine.max_len:
        raise ValueError(f"{machine.name} declares max_len {machine.max_len}")
    results = set()
    frontier = {("", None)}
    for length in range(max_len + 1):
        nxt = set()
        for prefix, aux in frontier:
            for (token, new_aux), _ in _step_outcomes(machine, tuple(prefix), aux).items():
                if token == EOS:
                    results.add(prefix)
                elif length < max_len:
                    nxt.add((prefix + token, new_aux))
        frontier = nxt
    return results


def replay(machine: TokenMachine, witness) -> str:
    """Run the machine on a witness; returns the completed output."""
    prefix: tuple[str, ...] = ()
    aux = None
    for bits in witness:
        token, aux = machine.step(prefix, aux, TapeBits(bits))
        if token == EOS:
            return "".join(prefix)
        prefix = prefix + (token,)
    raise ValueError("witness ended before EOS")


def iterative_bit_discovery(step: Callable, prefix=(), aux=None, cap: int = 20) -> int:
    """Smallest k such that every assignment of k bits lets the step halt
    without reading bit k+1.  Mirrors how an undeclared bound would be
    found; fixtures declare bounds instead."""
    for k in range(cap + 1):
        needs_more = False
        for code in range(1 << k):
            bits = tuple((code >> i) & 1 for i in range(k))
            try:
                step(prefix, aux, TapeBits(bits))
            except _OutOfBits:
                needs_more = True
                break
        if not needs_more:
            return k
    raise DiscoveryCap(f"no halting bound found within {cap} bits")


def string_to_domain(tokens: tuple[str, ...], s: str) -> int:
    """Length-then-lexicographic bijection from strings to the domain."""
    q = len(tokens)
    order = {tok: k for k, tok in enumerate(tokens)}
    if q == 1:
        return len(s) + 1
    rank = 0
    for ch in s:
        rank = rank * q + order[ch]
    start = (q ** len(s) - 1) // (q - 1)
    return start + rank + 1


def domain_to_string(tokens: tuple[str, ...], x: int) -> str:
    q = len(tokens)
    if x < 1:
        raise ValueError("domain elements are positive")
    if q == 1:
        return tokens[0] * (x - 1)
    length, start = 0, 0
    while start + q ** length < x:
        start += q ** length
        length += 1
    rank = x - start - 1
    out = []
    for _ in range(length):
        out.append(tokens[rank % q])
        rank //= q
    return "".join(reversed(out))


def token_machine_generator(machine: TokenMachine) -> Generator:
    """Wrap a token machine as a domain-level Generator via the
    length-then-lexicographic string bijection."""

    def sampler(rng):
        prefix: tuple[str, ...] = ()
        aux = None
        for _ in range(100 * (machine.max_len + 1)):
            token, aux = machine.step(prefix, aux, RngBits(rng, machine.bit_bound))
            if token == EOS:
                return string_to_domain(machine.tokens, "".join(prefix))
            prefix = prefix + (token,)
        raise IterationCap(f"{machine.name} emitted no EOS")

    def decide(x):
        return mop_decide(machine, domain_to_string(machine.tokens, x)).answer

    return Generator(sampler, decide, f"machine({machine.name})")


def _det_a_step(prefix, aux, bits):
    return ("a", aux) if len(prefix) == 0 else (EOS, aux)


def _coin_ab_step(prefix, aux, bits):
    if len(prefix) == 0:
        return ("a" if bits.read() == 0 else "b", aux)
    return (EOS, aux)


def _uniform_len2_step(prefix, aux, bits):
    if len(prefix) < 2:
        return ("a" if bits.read() == 0 else "b", aux)
    return (EOS, aux)


MACHINES = {
    "det-a": TokenMachine("det-a", ("a",), _det_a_step, bit_bound=0, max_len=6),
    "coin-ab": TokenMachine("coin-ab", ("a", "b"), _coin_ab_step, bit_bound=1, max_len=6),
    "uniform-len2": TokenMachine("uniform-len2", ("a", "b"), _uniform_len2_step,
                                 bit_bound=1, max_len=6),
}
