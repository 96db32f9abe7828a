import pytest

from orbitkit.groups import cyclic_group, dihedral_group, direct_product, \
    symmetric_group
from orbitkit.simplicial import GSSet, boundary_simplex, standard_simplex


@pytest.fixture(scope="session")
def c2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def c4():
    return cyclic_group(4)


@pytest.fixture(scope="session")
def v4():
    return direct_product(cyclic_group(2), cyclic_group(2))


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def d4():
    return dihedral_group(4)


def with_trivial_action(s: GSSet, group) -> GSSet:
    """Re-equip a plain simplicial set with the trivial action of a group."""
    return GSSet(group, s.dim_of, {k: s.faces[k] for k in s.faces},
                 {g: {x: x for x in s.dim_of} for g in group.elements()})


def swap_boundary1(group) -> GSSet:
    """Two points swapped by the generator of C2 (a free action)."""
    full = standard_simplex(1)
    b = boundary_simplex(1)
    ids = list(b.ids())
    assert ids == [0, 1]
    return GSSet(group, {0: 0, 1: 0}, {},
                 {0: {0: 0, 1: 1}, 1: {0: 1, 1: 0}})


def vee(group) -> GSSet:
    """Subdivided interval a -> m <- b with the C2 swap a<->b, ea<->eb.

    Mixed stabilizers: the middle vertex is fixed, the rest form free
    orbits; the fixed subcomplex is the single vertex m.
    """
    from orbitkit.simplicial import SimplexRef
    # ids: 0 = a, 1 = b, 2 = m, 3 = ea (a->m), 4 = eb (b->m)
    dim_of = {0: 0, 1: 0, 2: 0, 3: 1, 4: 1}
    faces = {3: (SimplexRef(2), SimplexRef(0)),
             4: (SimplexRef(2), SimplexRef(1))}
    action = {0: {i: i for i in range(5)},
              1: {0: 1, 1: 0, 2: 2, 3: 4, 4: 3}}
    return GSSet(group, dim_of, faces, action)
