#pragma once

#include <string>
#include <utility>
#include <vector>

#include "plcw/constructions.hpp"

namespace plcw::test {

struct Entry {
  std::string name;
  Complex complex;
};

// Library complexes shared by the tests.
inline std::vector<Entry> corpus() {
  std::vector<Entry> out;
  for (const char* name :
       {"point", "segment", "circle:1", "circle:3", "simplex:1", "simplex:2", "simplex:3", "ball_bihemisphere:2",
        "ball_bihemisphere:3", "sphere_bihemisphere:1", "sphere_bihemisphere:2", "ngon_disk:1", "ngon_disk:2",
        "ngon_disk:5", "two_globe", "annulus_with_radius", "disk_with_radius", "cylinder_s1xIxI", "torus_square_word",
        "rectangle"})
    out.push_back({name, standard(name)});
  return out;
}

// Alternating sum, computed independently of Complex::euler_characteristic.
inline long long alternating_sum(const FVector& f) {
  long long chi = 0;
  for (std::size_t d = 0; d < f.size(); ++d) chi += (d % 2 ? -1 : 1) * static_cast<long long>(f[d]);
  return chi;
}

}  // namespace plcw::test
