import random
from fractions import Fraction
from itertools import combinations

import pytest

from configs import get_settings
from src.cone import (
    Cone,
    Fan,
    all_faces,
    cone_equal,
    dim,
    face_lattice,
    face_zero,
    facets_to_rays,
    killer_certificate,
    project,
    rays_to_facets,
    relints_meet,
    subdivide_containing,
)
from src.exactnum import dot, primitive_rational, rank_of
from src.exceptions import ContainmentError, InputError
from src.toric import ToricCube


def precube_h_description():
    units = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    return units + [(-1, 1, -1, 1), (1, -1, -1, 1)]


class TestDoubleDescription:

    def test_rays_to_facets(self, triangle_rays):
        c = Cone.from_rays(3, triangle_rays)
        assert set(rays_to_facets(c)) == {(-1, 1, 1), (1, -1, 1), (1, 1, -1)}

    def test_facets_to_rays(self, precube_rays):
        c = Cone.from_inequalities(4, precube_h_description())
        assert facets_to_rays(c) == tuple(precube_rays)

    def test_descriptions_agree(self, precube_rays):
        from_h = Cone.from_inequalities(4, precube_h_description())
        from_v = Cone.from_rays(4, precube_rays)
        assert cone_equal(from_h, from_v)
        assert from_h == from_v
        assert hash(from_h) == hash(from_v)

    def test_redundant_generators_dropped(self):
        c = Cone.from_rays(2, [(1, 0), (0, 1), (1, 1), (2, 0)])
        assert c.rays == ((0, 1), (1, 0))

    def test_rays_are_primitive_and_sorted(self):
        c = Cone.from_rays(3, [(2, 2, 0), (0, 3, 3), (4, 0, 4)])
        assert c.rays == ((0, 1, 1), (1, 0, 1), (1, 1, 0))

    def test_half_plane_has_lineality(self):
        c = Cone.from_inequalities(2, [(1, 0)])
        assert not c.is_pointed
        assert c.lineality == ((0, 1),)
        assert set(c.rays) == {(0, 1), (0, -1), (1, 0)}
        assert c.dim == 2

    def test_ray_has_equations(self):
        c = Cone.from_rays(2, [(1, 1)])
        assert c.dim == 1
        assert len(c.equations) == 1
        assert len(c.facets) == 3
        assert c.contains((3, 3))
        assert not c.contains((1, 2))

    def test_zero_and_orthant(self):
        assert Cone.zero(3).dim == 0
        assert Cone.zero(3).rays == ()
        assert Cone.orthant(3).rays == ((0, 0, 1), (0, 1, 0), (1, 0, 0))

    def test_needs_exactly_one_description(self):
        with pytest.raises(InputError):
            Cone(2)
        with pytest.raises(InputError):
            Cone(2, rays=[(1, 0)], inequalities=[(1, 0)])

    def test_wrong_length_rejected(self):
        with pytest.raises(InputError):
            Cone.from_rays(3, [(1, 0)])


class TestDimensionAndFaces:

    def test_dim(self, triangle_rays):
        assert dim(Cone.from_rays(3, triangle_rays)) == 3

    def test_dim_of_degenerate_cones(self):
        assert dim(Cone.zero(2)) == 0
        assert dim(Cone.from_rays(3, [(1, 0, 1), (2, 0, 2)])) == 1

    def test_face_zero(self, precube_rays, triangle_rays):
        precube = Cone.from_rays(4, precube_rays)
        assert face_zero(precube, [2, 3]).rays == ((1, 1, 0, 0),)
        triangle = Cone.from_rays(3, triangle_rays)
        assert face_zero(triangle, [0]).rays == ((0, 1, 1),)

    def test_face_zero_can_be_apex(self, triangle_rays):
        assert face_zero(Cone.from_rays(3, triangle_rays), [0, 1]).dim == 0

    def test_face_zero_index_out_of_range(self, triangle_rays):
        with pytest.raises(InputError):
            face_zero(Cone.from_rays(3, triangle_rays), [3])

    def test_project(self, precube_rays, quadrilateral_rays):
        precube = Cone.from_rays(4, precube_rays)
        assert project(precube, [2, 3]).rays == ((0, 1), (1, 1))
        quad = Cone.from_rays(3, quadrilateral_rays)
        assert project(quad, [1, 2]) == Cone.orthant(2)

    def test_face_lattice_of_quadrilateral(self, quadrilateral_rays):
        poset = face_lattice(Cone.from_rays(3, quadrilateral_rays))
        assert len(poset) == 9
        assert poset.dims.count(1) == 4
        assert poset.dims.count(2) == 4
        # rays sorted as (0,1,1), (1,0,0), (1,0,1), (1,1,0)
        edges = {tuple(sorted(e)) for e, d in zip(poset.elements, poset.dims) if d == 2}
        assert edges == {(0, 2), (0, 3), (1, 2), (1, 3)}
        assert poset.elements[poset.top] == frozenset(range(4))

    def test_face_lattice_of_simplicial_cone(self, triangle_rays):
        poset = face_lattice(Cone.from_rays(3, triangle_rays))
        assert len(poset) == 7
        assert len(poset.maximal_chains()) == 6

    def test_face_lattice_covers(self, quadrilateral_rays):
        poset = face_lattice(Cone.from_rays(3, quadrilateral_rays))
        assert len(poset.covers) == 8 + 4
        for lower, upper in poset.covers:
            assert poset.dims[upper] == poset.dims[lower] + 1

    def test_face_lattice_of_single_ray(self):
        poset = face_lattice(Cone.from_rays(2, [(1, 2)]))
        assert len(poset) == 1
        assert poset.maximal_chains() == [(frozenset({0}),)]

    def test_face_lattice_rejects_lines(self):
        with pytest.raises(InputError, match="face lattice requires pointed cone"):
            face_lattice(Cone.from_rays(2, [(1, 0), (-1, 0)]))

    def test_all_faces_of_quadrant(self):
        faces = all_faces(Cone.orthant(2))
        assert [f.dim for f in faces] == [0, 1, 1, 2]


class TestCertificates:

    def test_killer_excludes_axis(self):
        c = Cone.from_rays(3, [(1, 1, 1), (1, 0, 2), (0, 1, 2), (0, 0, 1)])
        assert killer_certificate(c, [2]) == (-1, 0, 1)

    def test_killer_for_absent_pair(self, triangle_rays):
        c = Cone.from_rays(3, triangle_rays)
        w = killer_certificate(c, [0, 1])
        assert w == (1, 1, -1)
        assert all(sum(a * b for a, b in zip(w, r)) >= 0 for r in triangle_rays)

    def test_orthant_has_no_killers(self):
        c = Cone.orthant(3)
        for s in [(), (0,), (1, 2), (0, 1, 2)]:
            assert killer_certificate(c, s) is None

    def test_killer_is_none_exactly_on_present_strata(self, precube_rays, triangle_rays, quadrilateral_rays):
        for n, rays in [(4, precube_rays), (3, triangle_rays), (3, quadrilateral_rays)]:
            c = Cone.from_rays(n, rays)
            cube = ToricCube(c)
            for st in cube.strata():
                w = killer_certificate(c, st.support)
                assert (w is None) == st.present
                if w is not None:
                    assert all(w[j] <= 0 for j in range(n) if j not in st.support)
                    assert any(w[j] < 0 for j in range(n) if j not in st.support)
                    assert all(c.contains(r) and sum(a * b for a, b in zip(w, r)) >= 0 for r in rays)


class TestFans:

    def test_subdivide_equal_cones(self):
        d = Cone.orthant(2)
        fan = subdivide_containing(d, d)
        assert len(fan) == 1
        assert fan.cones[0] == d

    def test_subdivide_forced_split(self):
        d = Cone.from_rays(2, [(1, 1), (1, 0)])
        fan = subdivide_containing(d, Cone.orthant(2))
        assert fan.cones[0] == d
        assert [c.rays for c in fan.cones[1:]] == [((0, 1), (1, 1))]

    def test_subdivide_around_ray(self):
        d = Cone.from_rays(2, [(1, 1)])
        fan = subdivide_containing(d, Cone.orthant(2))
        assert fan.cones[0] == d
        assert {c.rays for c in fan.cones[1:]} == {((0, 1), (1, 1)), ((1, 0), (1, 1))}

    def test_subdivide_rejects_outside_ray(self):
        d = Cone.from_rays(2, [(1, -1)])
        with pytest.raises(ContainmentError) as excinfo:
            subdivide_containing(d, Cone.orthant(2))
        assert excinfo.value.witness == (1, -1)

    def test_split_keeps_faces(self):
        fan = Fan(2, tuple(all_faces(Cone.orthant(2))))
        refined = fan.split([(1, -1)])
        dims = sorted(c.dim for c in refined)
        assert dims == [0, 1, 1, 1, 2, 2]
        assert Cone.from_rays(2, [(1, 1)]).key in refined.keys()

    def test_split_by_supporting_hyperplane_is_noop(self):
        fan = Fan(2, tuple(all_faces(Cone.orthant(2))))
        assert fan.split([(1, 0)]).keys() == fan.keys()


class TestComparisons:

    def test_cone_equal_dimension_mismatch(self):
        with pytest.raises(InputError):
            cone_equal(Cone.orthant(2), Cone.orthant(3))

    def test_containment(self, triangle_rays):
        c = Cone.from_rays(3, triangle_rays)
        assert Cone.orthant(3).contains_cone(c)
        assert not c.contains_cone(Cone.orthant(3))

    def test_relints_meet(self):
        steep = Cone.from_rays(2, [(0, 1), (1, 2)])
        shallow = Cone.from_rays(2, [(0, 1), (1, 1)])
        assert relints_meet(steep, shallow)
        assert not relints_meet(Cone.from_rays(2, [(1, 2)]), Cone.from_rays(2, [(1, 3)]))

    def test_relint_of_face_misses_interior(self):
        quadrant = Cone.orthant(2)
        assert not relints_meet(quadrant, Cone.from_rays(2, [(1, 0)]))


def random_cone(rng: random.Random) -> Cone:
    n = rng.randint(1, 5)
    rays = [tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(rng.randint(1, 6))]
    return Cone.from_rays(n, rays)


def random_nonnegative_combination(rng: random.Random, rays, n: int) -> tuple:
    point = [Fraction(0)] * n
    for r in rays:
        c = Fraction(rng.randint(0, 6), rng.randint(1, 3))
        point = [p + c * x for p, x in zip(point, r)]
    return tuple(point)


class TestRandomCones:

    def setup_method(self):
        self.rng = random.Random(get_settings().seed)
        self.cones = [random_cone(self.rng) for _ in range(200)]

    def test_rays_facets_rays_round_trip(self):
        for c in self.cones:
            from_h = Cone.from_inequalities(c.ambient_dim, rays_to_facets(c))
            again = Cone.from_rays(c.ambient_dim, facets_to_rays(from_h))
            assert cone_equal(from_h, c), repr(c)
            assert cone_equal(again, c), repr(c)

    def test_facets_are_tight_on_a_spanning_set(self):
        for c in self.cones:
            for w in c.facets:
                assert all(dot(w, r) >= 0 for r in c.rays), repr(c)
            for w in c.proper_facets:
                tight = [r for r in c.rays if dot(w, r) == 0]
                assert rank_of(tight, c.ambient_dim) == c.dim - 1, f"{c!r}: {w}"

    def test_subdivision_covers_outer_cone(self):
        for _ in range(60):
            n = self.rng.randint(1, 4)
            units = [tuple(int(i == j) for j in range(n)) for i in range(n)]
            extra = [tuple(self.rng.randint(0, 3) for _ in range(n)) for _ in range(self.rng.randint(0, 2))]
            outer = Cone.from_rays(n, units + extra)
            inner_rays = [
                random_nonnegative_combination(self.rng, outer.rays, n) for _ in range(self.rng.randint(1, 3))
            ]
            inner = Cone.from_rays(n, [primitive_rational(r) for r in inner_rays if any(r)] or [units[0]])
            fan = subdivide_containing(inner, outer)

            assert fan.cones[0] == inner
            assert all(outer.contains_cone(c) for c in fan)
            for a, b in combinations(fan.cones, 2):
                assert not relints_meet(a, b), f"{inner!r} in {outer!r}"
            for _ in range(20):
                p = random_nonnegative_combination(self.rng, outer.rays, n)
                assert any(c.contains(p) for c in fan), f"{p} not covered"
                assert sum(c.relint_contains(p) for c in fan) <= 1
