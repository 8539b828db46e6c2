#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hbops/norms.hpp"
#include "hbops/operators.hpp"
#include "hbops/symbols.hpp"

namespace hbops {

struct EvidencePair {
    double epsilon = 0.0;
    bool empty = true;
    double sup = 0.0;
};

// One criterion quantity: its sampled sup, a shell trace, and the verdict.
// Limit criteria over |phi(z)| -> 1 additionally carry the epsilon-region
// evidence pairs.
struct CriterionReport {
    std::string id;
    NormEstimate sup;
    Classification classification = Classification::Inconclusive;
    std::vector<EvidencePair> evidence;
    bool empty_region = false;
    DecayThresholds thresholds;
};

// eps_i = 2^-i, i = 1..12.
std::vector<double> default_epsilon_schedule();

// (10): sup (1-|z|^2) |Rphi(z)| |g(z)| / (1-|phi(z)|^2).
CriterionReport criterion_B10(const HoloSelfMap& phi, const Symbol& g, const SamplingGrid& grid,
                              const DecayThresholds& th = {}, int threads = 1);

// (11): sup (1-|z|^2) |Rg(z)| log(e/(1-|phi(z)|^2)).
CriterionReport criterion_B11(const HoloSelfMap& phi, const Symbol& g, const SamplingGrid& grid,
                              const DecayThresholds& th = {}, int threads = 1);

// (21)/(22): the same quantities as |phi(z)| -> 1, classified from the
// epsilon-region evidence.
CriterionReport criterion_C21(const HoloSelfMap& phi, const Symbol& g, const SamplingGrid& grid,
                              const std::vector<double>& schedule = default_epsilon_schedule(),
                              const DecayThresholds& th = {}, int threads = 1);
CriterionReport criterion_C22(const HoloSelfMap& phi, const Symbol& g, const SamplingGrid& grid,
                              const std::vector<double>& schedule = default_epsilon_schedule(),
                              const DecayThresholds& th = {}, int threads = 1);

// (27)/(28): decay in |z| -> 1 of (1-|z|^2)|Rg| and (1-|z|^2)|Rphi||g|.
CriterionReport criterion_L27(const HoloSelfMap& phi, const Symbol& g, const SamplingGrid& grid,
                              const DecayThresholds& th = {}, int threads = 1);
CriterionReport criterion_L28(const HoloSelfMap& phi, const Symbol& g, const SamplingGrid& grid,
                              const DecayThresholds& th = {}, int threads = 1);

// (30)/(31): decay in |z| -> 1 of the two bounded-criterion quantities.
CriterionReport criterion_LC30(const HoloSelfMap& phi, const Symbol& g, const SamplingGrid& grid,
                               const DecayThresholds& th = {}, int threads = 1);
CriterionReport criterion_LC31(const HoloSelfMap& phi, const Symbol& g, const SamplingGrid& grid,
                               const DecayThresholds& th = {}, int threads = 1);

struct DictionaryEntry {
    std::string id;
    std::shared_ptr<const BallFunction> fn;
    double zygmund_norm = 0.0;
};

// max over the dictionary of ||R(I_phi^g f)||_B / ||f||_Z, a lower bound for
// the operator norm of R I_phi^g : Z -> B. Outputs are evaluated through the
// Lemma-1 shortcut.
double operator_norm_lower_bound(const HoloSelfMap& phi, const Symbol& g,
                                 const std::vector<DictionaryEntry>& dictionary,
                                 const SamplingGrid& grid, int threads = 1);

} // namespace hbops
