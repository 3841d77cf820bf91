#ifndef FLAGCY_VERIFY_HPP
#define FLAGCY_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "flagcy/calabi.hpp"

namespace flagcy {

// splitmix64: the pinned PRNG for point sampling; reported in the output as
// "splitmix64-polar" together with the draw order so reports are reproducible
// across conforming implementations.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double uniform() {  // [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
};

// Point `index` of the sweep with master seed `seed`: per-point generator
// seeded with seed ^ index; draws z_1..z_m uniformly in the disk of radius
// z_radius (r = R sqrt(u), angle = 2 pi v), then xi in the disk of radius
// xi_radius.
FiberPoint sample_point(std::uint64_t seed, std::uint64_t index, int dim,
                        double z_radius = 0.8, double xi_radius = 2.0);

struct FdSteps {
  double einstein = 1e-3;
  double ricci_base = 1e-3;
  double ricci_xi_scale = 1e-2;  // fiber step = scale * (1 + |xi|)
  double kahlerness = 1e-3;
};

struct Tolerances {
  double einstein = 1e-4;
  double monge_ampere = 1e-8;
  double ricci = 1e-4;
  double kahlerness = 1e-5;
  double det_constancy = 1e-8;
  double positivity = 0.0;   // pass iff min eigenvalue strictly above this
  double vertical = 0.02;    // relative exponent error
};

struct RunConfig {
  std::string lie_type = "A1";
  std::vector<int> theta;  // 0-based
  std::optional<std::vector<double>> weights;
  double constant = 1.0;
  int samples = 25;
  std::uint64_t seed = 0;
  FdSteps fd;
  Tolerances tol;
  std::string out;            // empty = stdout
  std::string format = "json";
};

struct CheckRecord {
  std::string name;
  int points = 0;
  double max_defect = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  nlohmann::ordered_json case_info;
  nlohmann::ordered_json config_echo;
  std::vector<CheckRecord> checks;
  std::uint64_t seed = 0;
  double wall_time_ms = 0.0;
  bool pass = false;
  std::string error;  // set when a computation failed mid-run

  nlohmann::ordered_json to_json() const;
};

// Case construction shared by the commands.
struct CaseContext {
  LieType type;
  ParabolicData pd;
  std::optional<PotentialSpec> ps;  // absent for exceptional types
};

CaseContext build_case(const RunConfig& cfg, bool need_potential);

nlohmann::ordered_json case_summary(const ParabolicData& pd);
nlohmann::ordered_json config_summary(const RunConfig& cfg);

// Runs the full check suite over `samples` seeded points.  Module errors
// during the sweep are embedded in the report (error field) rather than
// thrown.
VerificationReport run_verification(const RunConfig& cfg);

// Sample stream rows: z, xi, phi, eigenvalues of g, detG, u.
std::string sample_csv(const RunConfig& cfg);
nlohmann::ordered_json sample_json(const RunConfig& cfg);

}  // namespace flagcy

#endif
