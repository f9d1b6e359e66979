#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mhc/graph.hpp"

namespace mhc {

enum class GenClass {
  Random,
  BoundedValence,
  IrregularBoundedValence,
  Mesh2D,
  Mesh3D,
  Mesh4D,
  IrregularMesh,
  ScaleFree,
};

std::string to_string(GenClass c);
GenClass gen_class_from_string(const std::string& s);

/// One benchmark instance description. Which params apply depends on the
/// class; validate() rejects inconsistent combinations.
struct GenSpec {
  GenClass cls = GenClass::Random;
  int n = 0;                  // derived from dims for mesh classes
  double eta = 0.0;           // Random: edge probability
  int valence = 0;            // BoundedValence / IrregularBoundedValence
  double rewire = 0.0;        // IrregularBoundedValence: rewired edge fraction
  std::vector<int> dims;      // mesh side lengths
  double rho = 0.0;           // IrregularMesh: added edges per vertex
  double alpha = 0.0;         // ScaleFree
  double beta = 0.0;          // ScaleFree
  std::uint64_t seed = 0;
  std::string id;             // optional; default derived from the fields

  void validate() const;
  std::string instance_id() const;  // id if set, else canonical string
  std::string params_string() const;
};

Graph gen_random(int n, double eta, std::uint64_t seed);
Graph gen_bounded_valence(int n, int valence, std::uint64_t seed);
Graph gen_irregular_bounded_valence(int n, int valence, double rewire_fraction,
                                    std::uint64_t seed);
Graph gen_mesh(const std::vector<int>& dims);
Graph gen_irregular_mesh(const std::vector<int>& dims, double rho, std::uint64_t seed);
Graph gen_scale_free(int n, double alpha, double beta, std::uint64_t seed);

/// Dispatch on spec.cls.
Graph generate(const GenSpec& spec);

/// Manifest: one spec per line in key=value form, e.g.
///   class=random n=60 eta=0.05 seed=7
///   class=mesh2d dims=4x4 seed=0 id=grid4
/// '#' starts a comment; blank lines are skipped.
std::vector<GenSpec> parse_manifest(std::istream& in);
GenSpec parse_gen_spec(const std::string& line);

}  // namespace mhc
