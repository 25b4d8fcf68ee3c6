#pragma once

#include "rsos/qlaurent.hpp"
#include "rsos/paths.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rsos {

enum class Model { Abf, Parafermion };

enum class Method { Brute, Bosonic, Fermionic1, Fermionic2, Recursion, Dfunction };

std::string to_string(Model m);
std::string to_string(Method m);
Model parse_model(const std::string& s);        // throws std::invalid_argument
Method parse_method(const std::string& s);      // throws std::invalid_argument

enum class ReportFormat { Text, Json, Csv };
ReportFormat parse_format(const std::string& s);

/// One identity sweep: all admissible (a, b, c, L) for each p'.
struct SweepConfig {
    std::vector<int> p_primes;
    int max_L = 0;
    std::optional<int> exact_L;
    std::vector<Model> models;
    std::vector<Method> methods;
    ReportFormat format = ReportFormat::Text;
    int workers = 1;
    std::vector<int> systems = {1, 2};  // for mn sweeps

    /// Testing hook: corrupt one coefficient of this method's polynomial in
    /// family #corrupt_index so the comparator must locate it.
    std::optional<Method> corrupt_method;
    int corrupt_index = 0;

    void validate() const;  // throws std::invalid_argument
};

/// Compute one family's generating function by the requested route.
LaurentPoly compute_gf(Model model, Method method, const FamilyParams& family);

/// Run every requested method over the sweep and compare polynomials
/// exactly.  One report line per family; exit code 0 iff all PASS,
/// 1 on any FAIL.
int run_verify(const SweepConfig& config, std::ostream& out);

/// Appendix-B checks per family: injectivity and weight preservation of
/// the path -> partition map and equality with the hook-difference
/// generating function.
int run_bijection(const SweepConfig& config, std::ostream& out);

/// Appendix-A checks per family: the linear systems hold with nonnegative
/// particle contents for every path.
int run_mn(const SweepConfig& config, std::ostream& out);

/// The worked single-path example: striking sequences, m-values, weight.
int run_fixture(const std::string& name, std::ostream& out);

}  // namespace rsos
