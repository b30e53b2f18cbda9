#pragma once

#include "plateau/spectral.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace plateau {

// Outcome of one brute-force vs closed-form sweep.
struct OracleTally {
    std::string name;
    std::uint64_t queries = 0;
    std::uint64_t mismatches = 0;
    bool skipped = false;
    bool exhaustive = true;
    std::string note;
    std::vector<std::string> first_mismatches;

    bool ok() const { return skipped || mismatches == 0; }
};

struct OracleOptions {
    bool force_exhaustive = false;
    std::size_t sample_vectors = 1000;
    int jobs = 0;
};

// Closed forms for the exponential-sum counts.
BigRational closed_form_M(const PlateauProfile& prof, int a, std::uint64_t b);
BigRational closed_form_N0(const PlateauProfile& prof, std::uint64_t a);
BigRational closed_form_Nsq(const PlateauProfile& prof, std::uint64_t a, bool square);
BigRational closed_form_Ni(const PlateauProfile& prof, int i, std::uint64_t a, int b);

// Direct counts.
std::uint64_t count_M(const PFunction& f, int a, std::uint64_t b);
std::uint64_t count_N0(const PFunction& f, std::uint64_t a);
std::uint64_t count_Nsq(const PFunction& f, std::uint64_t a, bool square);
std::uint64_t count_Ni(const PFunction& f, int i, std::uint64_t a, int b);

// True when the sweep over all vectors is cheap enough to run by default.
bool oracle_exhaustive_by_default(int p, int n);

std::vector<OracleTally> exp_sum_oracles(const PFunction& f, const PlateauProfile& prof, const FamilyReport& fam,
                                         const OracleOptions& opt = {});
std::vector<OracleTally> value_oracles(const PFunction& f, const PlateauProfile& prof,
                                       const std::optional<DualProfile>& dual, const FamilyReport& fam, int jobs = 0);

}  // namespace plateau
