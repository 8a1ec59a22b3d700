#pragma once

#include <string>
#include <vector>

#include "plcw/complex.hpp"

namespace plcw {

/// Shorthand for complexes of dimension <= 2: vertices, oriented edges and
/// faces given as cyclic words of signed edge symbols.
struct PolygonPresentation {
  struct Edge {
    std::string name, tail, head;
  };
  struct Letter {
    std::string edge;
    int sign = 1;  // -1: traversed from head to tail
  };
  struct Face {
    std::string name;
    std::vector<Letter> word;
  };

  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;
};

Complex from_polygon_presentation(const PolygonPresentation& p);

/// The closed cell: a point for a vertex, otherwise ball(pullback(k, c)).
Complex cell_ball(const Complex& k, CellId c);

/// Cells of K, cells of L, then one cell a*b per pair, by dim a, a, b.
Complex join(const Complex& k, const Complex& l);
/// One cell a x b per pair, ordered by dimension, then dim a, a, b.
Complex product(const Complex& k, const Complex& l);
Complex cone(const Complex& k, const std::string& apex_label = "o");

/// Index of the join cell a*b inside join(k, l).
CellId join_cell(const Complex& k, const Complex& l, CellId a, CellId b);
/// Index of a cell of l inside join(k, l).
CellId join_right(const Complex& k, CellId b);
CellId product_cell(const Complex& k, const Complex& l, CellId a, CellId b);

/// Induced map join(a, b) -> join(a2, b2) of regular maps f: a -> a2, g: b -> b2.
CellMap join_map(const CellMap& f, const Complex& a, const Complex& a2, const CellMap& g, const Complex& b,
                 const Complex& b2);
CellMap product_map(const CellMap& f, const Complex& a, const Complex& a2, const CellMap& g, const Complex& b,
                    const Complex& b2);

Complex point(const std::string& label = "p");
/// Circle made of k vertices and k edges.
Complex circle(int k);
Complex segment();

Complex simplex(int n);
/// Two hemispheres in every dimension below n, plus the top cell.
Complex ball_bihemisphere(int n);
Complex sphere_bihemisphere(int n);
Complex ngon_disk(int k);
Complex two_globe();
Complex annulus_with_radius();
Complex disk_with_radius();
Complex cylinder_s1xIxI();
Complex torus_square_word();
/// Rectangle a1 a2 b2 b1 that maps onto the annulus with radius.
Complex rectangle();

std::vector<std::string> standard_names();
/// Looks up a library complex. Names may carry one integer parameter:
/// "simplex:3", "ngon_disk:5", "ball_bihemisphere:3", "circle:4".
Complex standard(const std::string& name);

}  // namespace plcw
