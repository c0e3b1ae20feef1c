from fractions import Fraction

import pytest

from src.cone import Cone
from src.cw import (
    OpenCell,
    build_cw,
    cell_closure,
    characteristic_domain,
    euler,
    locate,
    refine_complex,
    regularity_report,
    tuffley_partition,
)
from src.exceptions import InputError
from src.toric import MonomialMap, ToricCube, log_cone_of_map

FULL = (0, 1, 2)


class TestTuffleyPartition:

    def test_triangle(self, triangle_cube):
        cells = tuffley_partition(triangle_cube)
        assert len(cells) == 15
        assert euler(cells) == 1

    def test_unit_interval(self):
        cells = tuffley_partition(ToricCube.from_map(MonomialMap.identity(1)))
        assert [(c.support, c.dim) for c in cells] == [((), 0), ((0,), 0), ((0,), 1)]

    def test_quadrilateral(self, quadrilateral_map):
        cells = tuffley_partition(ToricCube.from_map(quadrilateral_map))
        assert len(cells) == 21
        by_support = {}
        for c in cells:
            by_support[c.support] = by_support.get(c.support, 0) + 1
        assert by_support == {(): 1, (0,): 2, (1,): 2, (2,): 2, (1, 2): 4, FULL: 10}

    def test_ids_follow_support_order(self, triangle_cube):
        cells = tuffley_partition(triangle_cube)
        assert [c.id for c in cells] == list(range(1, 16))
        assert cells[0].support == ()
        assert cells[-1].support == FULL and cells[-1].dim == 3


class TestBuildCW:

    def setup_method(self):
        self.triangle = build_cw(ToricCube.from_map(MonomialMap.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])))

    def test_triangle_matches_tuffley_partition(self, triangle_cube):
        assert self.triangle.f_vector == (5, 6, 3, 1)
        assert self.triangle.refinements == 0
        assert [c.key for c in self.triangle.cells] == [c.key for c in tuffley_partition(triangle_cube)]

    def test_top_cell_covers(self):
        top = self.triangle.find(FULL, [(0, 1, 1), (1, 0, 1), (1, 1, 0)])
        below = {lower for lower, upper in self.triangle.hasse_edges() if upper == top.id}
        faces = {
            self.triangle.find(FULL, [(0, 1, 1), (1, 0, 1)]).id,
            self.triangle.find(FULL, [(0, 1, 1), (1, 1, 0)]).id,
            self.triangle.find(FULL, [(1, 0, 1), (1, 1, 0)]).id,
        }
        assert below == faces

    def test_face_cell_covers(self):
        face = self.triangle.find(FULL, [(1, 0, 1), (0, 1, 1)])
        below = {lower for lower, upper in self.triangle.hasse_edges() if upper == face.id}
        expected = {
            self.triangle.find(FULL, [(1, 0, 1)]).id,
            self.triangle.find(FULL, [(0, 1, 1)]).id,
            self.triangle.find((0,), [(1,)]).id,
            self.triangle.find((1,), [(1,)]).id,
        }
        assert below == expected

    def test_quadrilateral(self, quadrilateral_map):
        complex = build_cw(ToricCube.from_map(quadrilateral_map))
        assert len(complex) == 21
        assert complex.f_vector == (6, 9, 5, 1)
        assert euler(complex) == 1
        assert complex.refinements == 0

    def test_unit_interval(self):
        complex = build_cw(ToricCube.from_map(MonomialMap.identity(1)))
        interval = complex.find((0,), [(1,)])
        closure = {c.key for c in cell_closure(interval, complex)}
        assert closure == {((), ()), ((0,), ()), ((0,), ((1,),))}

    def test_find_unknown_cell(self):
        with pytest.raises(InputError):
            self.triangle.find((0, 1), [])


class TestCellClosure:

    def setup_method(self):
        self.complex = build_cw(ToricCube.from_map(MonomialMap.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])))

    def test_face_cell(self):
        face = self.complex.find(FULL, [(1, 0, 1), (0, 1, 1)])
        closure = cell_closure(face, self.complex)
        keys = {c.key for c in closure}
        assert len(closure) == 9
        assert keys == {
            (FULL, ((0, 1, 1), (1, 0, 1))),
            (FULL, ((1, 0, 1),)),
            (FULL, ((0, 1, 1),)),
            (FULL, ()),
            ((0,), ((1,),)),
            ((0,), ()),
            ((1,), ((1,),)),
            ((1,), ()),
            ((), ()),
        }
        assert euler(closure) == 1

    def test_vertex_is_closed(self):
        vertex = self.complex.find((2,), [])
        assert cell_closure(vertex, self.complex) == [vertex]

    def test_full_support_apex_is_closed(self):
        apex = self.complex.find(FULL, [])
        assert cell_closure(apex, self.complex) == [apex]

    def test_foreign_cell(self):
        foreign = OpenCell(id=99, support=(0, 1), cone=Cone.orthant(2))
        with pytest.raises(InputError):
            cell_closure(foreign, self.complex)

    def test_closures_are_subcomplexes(self):
        for c in self.complex.cells:
            closure = cell_closure(c, self.complex)
            assert c in closure
            assert all(h.dim < c.dim for h in closure if h.id != c.id)

    def test_locate(self):
        face = self.complex.find(FULL, [(1, 0, 1), (0, 1, 1)])
        assert locate(self.complex, FULL, (1, 1, 2)) == [face]
        top = self.complex.find(FULL, [(0, 1, 1), (1, 0, 1), (1, 1, 0)])
        assert locate(self.complex, FULL, (2, 2, 2)) == [top]
        assert locate(self.complex, (0,), (3,)) == [self.complex.find((0,), [(1,)])]
        assert locate(self.complex, (0, 1), (1, 1)) == []


class TestRefineComplex:

    def setup_method(self):
        self.square = build_cw(ToricCube(Cone.orthant(2)))

    def test_diagonal_splits_interior(self):
        refined = refine_complex(self.square, [ToricCube(Cone.from_rays(2, [(1, 1)]))])
        inside = [c.dim for c in refined.cells if c.support == (0, 1)]
        assert sorted(inside) == [0, 1, 1, 1, 2, 2]
        assert refined.f_vector == (4, 5, 2)
        assert refined.refinements == 1
        refined.find((0, 1), [(1, 1)])

    def test_refined_complex_is_regular(self):
        refined = refine_complex(self.square, [ToricCube(Cone.from_rays(2, [(1, 1)]))])
        assert regularity_report(refined).passed

    def test_own_cube_changes_nothing(self):
        refined = refine_complex(self.square, [ToricCube(Cone.orthant(2))])
        assert [c.key for c in refined.cells] == [c.key for c in self.square.cells]
        assert refined.refinements == 0

    def test_empty_refinement(self, triangle_cube):
        complex = build_cw(triangle_cube)
        assert [c.key for c in refine_complex(complex, []).cells] == [c.key for c in complex.cells]

    def test_dimension_mismatch(self):
        with pytest.raises(InputError):
            refine_complex(self.square, [ToricCube(Cone.orthant(3))])


class TestCharacteristicDomain:

    def test_quadrilateral(self, quadrilateral_rays):
        dom = characteristic_domain(Cone.from_rays(3, quadrilateral_rays))
        assert len(dom.poset) == 9
        # rays sorted as (0,1,1), (1,0,0), (1,0,1), (1,1,0)
        assert dom.sigma_ray([0, 1, 2, 3]) == (3, 2, 2)
        assert dom.sigma_ray([1, 3]) == (2, 1, 0)
        assert dom.sigma_ray([0, 3]) == (1, 2, 1)
        assert dom.sigma_ray([0, 2]) == (1, 1, 2)
        assert dom.sigma_ray([1, 2]) == (2, 0, 1)
        assert len(dom.chains) == 8

    def test_triangle(self, triangle_rays):
        dom = characteristic_domain(Cone.from_rays(3, triangle_rays))
        assert len(dom.poset) == 7
        assert len(dom.chains) == 6
        assert dom.sigma_ray([0, 1, 2]) == (2, 2, 2)

    def test_single_ray(self):
        dom = characteristic_domain(Cone.from_rays(2, [(1, 2)]))
        assert len(dom.poset) == 1
        assert len(dom.chains) == 1
        assert dom.sd_map == dom.base_map

    def test_subdivided_map_has_same_image(self, quadrilateral_rays):
        cone = Cone.from_rays(3, quadrilateral_rays)
        dom = characteristic_domain(cone)
        assert log_cone_of_map(dom.sd_map) == cone

    def test_substitution_identifies_maps(self, quadrilateral_rays):
        dom = characteristic_domain(Cone.from_rays(3, quadrilateral_rays))
        t_sd = [Fraction(k + 1, k + 2) for k in range(len(dom.poset))]
        assert dom.base_map.evaluate(dom.compose(t_sd)) == dom.sd_map.evaluate(t_sd)

    def test_scaled_rays_have_equal_sums(self, quadrilateral_rays):
        dom = characteristic_domain(Cone.from_rays(3, quadrilateral_rays), rays_scaled=True)
        assert len({sum(r) for r in dom.rays}) == 1
        assert log_cone_of_map(dom.sd_map) == Cone.from_rays(3, quadrilateral_rays)

    def test_non_pointed_cone(self):
        with pytest.raises(InputError):
            characteristic_domain(Cone.from_rays(2, [(1, 0), (-1, 0)]))

    def test_apex(self):
        with pytest.raises(InputError):
            characteristic_domain(Cone.zero(2))


class TestRegularity:

    def test_triangle_passes(self, triangle_cube):
        report = regularity_report(build_cw(triangle_cube))
        assert report.passed
        assert report.euler_characteristic == 1
        assert all(c.ok for c in report.cells)

    def test_face_cell_euler(self, triangle_cube):
        complex = build_cw(triangle_cube)
        face = complex.find(FULL, [(1, 0, 1), (0, 1, 1)])
        row = next(c for c in regularity_report(complex).cells if c.id == face.id)
        assert row.closure_euler == 1
        assert row.boundary_euler == 0

    def test_quadrilateral_passes(self, quadrilateral_map):
        assert regularity_report(build_cw(ToricCube.from_map(quadrilateral_map))).passed

    def test_single_point(self):
        complex = build_cw(ToricCube.from_map(MonomialMap.from_rows([[0]])))
        assert complex.f_vector == (1,)
        report = regularity_report(complex)
        assert report.passed
        assert report.euler_characteristic == 1

    @pytest.mark.parametrize("f_vector, expected", [((5, 6, 3, 1), 1), ((6, 9, 5, 1), 1), ((), 0)])
    def test_euler_of_f_vector(self, f_vector, expected):
        assert euler(f_vector) == expected


class TestCharacteristicPolytope:

    def test_vertices(self, triangle_rays):
        dom = characteristic_domain(Cone.from_rays(3, triangle_rays))
        half = Fraction(1, 2)
        assert dom.polytope_vertices() == [
            (0, 0, 0),
            (0, half, half),
            (half, 0, half),
            (half, half, 0),
        ]
