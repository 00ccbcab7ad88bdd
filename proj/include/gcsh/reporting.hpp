#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "gcsh/degree.hpp"
#include "gcsh/spectral.hpp"
#include "gcsh/threshold.hpp"

namespace gcsh {

// Shortest text that round-trips a double: 17 significant digits.
std::string format_number(double x);

std::string json_quote(const std::string& s);

// CSV with the exact header lambda,count,sol_index,sup_norm,jac_sign; one row
// per solution (sup-norm ascending within a lambda), a single row with empty
// solution fields for a lambda without solutions, rows ordered by lambda.
void emit_bifurcation_csv(const SweepResult& sweep, std::ostream& os);

void emit_solution_set_json(const Graph& g, const SolutionSet& set,
                            std::ostream& os);
void emit_degree_json(const DegreeReport& report, std::ostream& os);
void emit_certificate_json(const AprioriCertificate& cert, std::ostream& os);
void emit_spectrum_json(const Spectrum& spec, std::ostream& os);

}  // namespace gcsh
