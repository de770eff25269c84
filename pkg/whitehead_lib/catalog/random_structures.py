"""Seeded random structures for the property checks.

Every generator takes a ``random.Random`` so a run is reproducible from its
seed.
"""

import logging
import random
from fractions import Fraction
from typing import Sequence

from ..dgl import DGLPresentation, check_d_squared
from ..free_lie import GeneratorSet, LieExpr
from ..linf import LInfStructure

_LOGGER = logging.getLogger(__name__)

COEFFICIENTS = (-2, -1, 1, 2)


def random_structure(
    rng: random.Random,
    max_dim: int = 4,
    max_arity: int = 4,
    density: float = 0.3,
) -> LInfStructure:
    """Random bracket tables on at most ``max_dim`` basis elements.

    Degrees range over -1..3 so that most argument tuples have a target;
    the generalized Jacobi identities usually fail.
    """
    dim = rng.randint(1, max_dim)
    basis = [(f"e{i}", rng.randint(-1, 3)) for i in range(dim)]
    structure = LInfStructure(basis, arity_bound=rng.randint(1, max_arity))
    for arity in range(1, structure.arity_bound + 1):
        for args in structure.canonical_tuples(arity):
            degree = structure.output_degree(args)
            targets = [name for name, d in basis if d == degree]
            if not targets or rng.random() > density:
                continue
            structure.set_bracket(args, {rng.choice(targets): rng.choice(COEFFICIENTS)})
    return structure


def random_central_structure(
    rng: random.Random,
    max_dim: int = 4,
    arities: Sequence[int] = (1, 2, 3, 4),
    min_degree: int = 0,
) -> LInfStructure:
    """Brackets of inputs landing in outputs that no bracket reads.

    Every composite of two brackets vanishes, so all generalized Jacobi
    identities hold.
    """
    inputs = rng.randint(1, max(1, max_dim - 1))
    basis = [(f"x{i}", rng.randint(min_degree, min_degree + 2)) for i in range(inputs)]
    names = [name for name, _ in basis]
    degrees = dict(basis)
    planned = []
    for j in range(max_dim - inputs):
        arity = rng.choice(list(arities))
        args = tuple(sorted(rng.choices(names, k=arity), key=names.index))
        output = f"c{j}"
        basis.append((output, sum(degrees[n] for n in args) + arity - 2))
        planned.append((args, output))
    structure = LInfStructure(basis, arity_bound=max(arities))
    for args, output in planned:
        if structure.canonical(args)[1] == 0:
            continue
        structure.set_bracket(args, {output: rng.choice(COEFFICIENTS)})
    return structure


def random_dgl(
    rng: random.Random,
    names: Sequence[str] = ("a", "b", "c"),
    truncation: int = 5,
    attempts: int = 20,
) -> DGLPresentation:
    """Free Lie algebra on a few generators with a random differential satisfying d^2 = 0.

    Candidate differentials use generators and brackets of two generators;
    after ``attempts`` rejected draws the differential is zero.
    """
    generators = [(name, rng.randint(1, 3)) for name in names]
    generators.sort(key=lambda item: item[1])
    for _ in range(attempts):
        differential = {}
        for name, degree in generators:
            candidates = [
                LieExpr.generator(other) for other, d in generators if d == degree - 1
            ]
            for i, (p, dp) in enumerate(generators):
                for q, dq in generators[i:]:
                    if dp + dq == degree - 1:
                        candidates.append(
                            LieExpr.bracket(LieExpr.generator(p), LieExpr.generator(q))
                        )
            if not candidates or rng.random() > 0.7:
                continue
            value = LieExpr.zero()
            for candidate in candidates:
                if rng.random() < 0.6:
                    value = value + candidate * rng.choice(COEFFICIENTS)
            if not value.is_formally_zero():
                differential[name] = value
        presentation = DGLPresentation(GeneratorSet(generators, truncation), differential)
        if check_d_squared(presentation):
            return presentation
    _LOGGER.debug("No differential with d^2 = 0 drawn for %s", generators)
    return DGLPresentation(GeneratorSet(generators, truncation))


def random_matrix(
    rng: random.Random, size: int, low: int = -3, high: int = 3
) -> list[list[Fraction]]:
    return [[Fraction(rng.randint(low, high)) for _ in range(size)] for _ in range(size)]


def random_degrees(rng: random.Random, size: int, odd_only: bool = False) -> list[int]:
    if odd_only:
        return [2 * rng.randint(0, 3) + 1 for _ in range(size)]
    return [rng.randint(1, 6) for _ in range(size)]


def random_odd_dimensions(
    rng: random.Random, max_count: int = 7, max_dimension: int = 21
) -> list[int]:
    count = rng.randint(1, max_count)
    return [rng.choice(range(3, max_dimension + 1, 2)) for _ in range(count)]
