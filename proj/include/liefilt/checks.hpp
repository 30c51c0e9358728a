#pragma once

#include <cstdint>

#include "liefilt/problem_file.hpp"
#include "liefilt/randomgen.hpp"
#include "liefilt/rclass.hpp"

namespace liefilt {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void fail(std::string where) {
    if (failures.size() < 8) failures.push_back(std::move(where));
  }
};

struct CheckOptions {
  std::uint64_t seed = 42;
  std::size_t instances = 25;
  std::size_t max_dim = 6;
  int degree = 4;
};

// Half triangular-matrix instances, half derivation towers; all validated.
std::vector<Instance> make_corpus(std::uint64_t seed, std::size_t count, std::size_t max_dim);

// exact
CheckResult check_rref_idempotent(const CheckOptions& o);
CheckResult check_kernel_rank(const CheckOptions& o);
CheckResult check_annihilator_involution(const CheckOptions& o);
CheckResult check_affine_leq_sampling(const CheckOptions& o);
// lie
CheckResult check_instances_valid(const std::vector<Instance>& corpus);
CheckResult check_derived_series(const std::vector<Instance>& corpus);
CheckResult check_induced_filtration(const std::vector<Instance>& corpus, const CheckOptions& o);
CheckResult check_product_construction(const std::vector<Instance>& corpus);
// polar
CheckResult check_vergne_polarization(const std::vector<Instance>& corpus, const CheckOptions& o);
CheckResult check_vergne_compatibility(const std::vector<Instance>& corpus, const CheckOptions& o);
CheckResult check_stabilizer_transversality(const std::vector<Instance>& corpus, const CheckOptions& o);
CheckResult check_theta_character(const std::vector<Instance>& corpus, const CheckOptions& o);
// pbw
CheckResult check_representation_identity(const std::vector<Instance>& corpus,
                                          const CheckOptions& o, std::size_t triples = 50);
CheckResult check_normal_order_associativity(const std::vector<Instance>& corpus,
                                             const CheckOptions& o);
CheckResult check_cyclic_relation(const std::vector<Instance>& corpus, const CheckOptions& o);
CheckResult check_highest_vectors(const std::vector<Instance>& corpus, const CheckOptions& o);
CheckResult check_filtration_slices(const std::vector<Instance>& corpus, const CheckOptions& o);
CheckResult check_t_shift_filtration(const std::vector<Instance>& corpus, const CheckOptions& o);
CheckResult check_maximal_submodule_shape(const std::vector<Instance>& corpus,
                                          const CheckOptions& o);
CheckResult check_highest_line_killing(const std::vector<Instance>& corpus, const CheckOptions& o);
CheckResult check_induced_kernel_codim(const std::vector<Instance>& corpus, const CheckOptions& o);
// classes
CheckResult check_equivalence_relation(const std::vector<Instance>& corpus, const CheckOptions& o);
CheckResult check_class_members(const std::vector<Instance>& corpus, const CheckOptions& o,
                                std::size_t samples = 20);
CheckResult check_spectra_crosscheck(const std::vector<Instance>& corpus, const CheckOptions& o,
                                     std::size_t candidates = 20);
CheckResult check_restrict_degenerate(const std::vector<Instance>& corpus, const CheckOptions& o);
CheckResult check_class_dimension(const std::vector<Instance>& corpus, const CheckOptions& o);
CheckResult check_product_class(const std::vector<Instance>& corpus, const CheckOptions& o);
CheckResult check_dixmier_constancy(const std::vector<Instance>& corpus, const CheckOptions& o,
                                    std::size_t samples = 20);
// cli
CheckResult check_builtin_roundtrip();

std::vector<CheckResult> run_all_checks(const CheckOptions& o);
std::string format_results(const std::vector<CheckResult>& results, const CheckOptions& o);

}  // namespace liefilt
