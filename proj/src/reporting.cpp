#include "gcsh/reporting.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <ostream>

namespace gcsh {

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += "\"";
  return out;
}

void emit_bifurcation_csv(const SweepResult& sweep, std::ostream& os) {
  os << "lambda,count,sol_index,sup_norm,jac_sign\n";
  for (const SweepPoint& point : sweep.points) {
    const std::size_t n = point.solutions.size();
    if (n == 0) {
      os << format_number(point.lambda) << ",0,,,\n";
      continue;
    }
    std::vector<double> norms(n);
    for (std::size_t i = 0; i < n; ++i) {
      norms[i] = point.solutions.solutions[i].lpNorm<Eigen::Infinity>();
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return norms[a] < norms[b]; });
    for (std::size_t rank = 0; rank < n; ++rank) {
      const std::size_t i = order[rank];
      os << format_number(point.lambda) << "," << n << "," << rank << ","
         << format_number(norms[i]) << "," << point.solutions.jacobian_signs[i]
         << "\n";
    }
  }
}

void emit_solution_set_json(const Graph& g, const SolutionSet& set,
                            std::ostream& os) {
  os << "{\"vertices\":[";
  for (int i = 0; i < g.size(); ++i) {
    if (i) os << ",";
    os << json_quote(g.vertex_ids()[i]);
  }
  os << "],\"count\":" << set.size() << ",\"solutions\":[";
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k) os << ",";
    os << "{\"u\":[";
    for (int i = 0; i < set.solutions[k].size(); ++i) {
      if (i) os << ",";
      os << format_number(set.solutions[k][i]);
    }
    os << "],\"residual_norm\":" << format_number(set.residual_norms[k])
       << ",\"jacobian_sign\":" << set.jacobian_signs[k] << "}";
  }
  os << "]}\n";
}

void emit_degree_json(const DegreeReport& report, std::ostream& os) {
  os << "{\"theoretical_degree\":" << report.theoretical_degree
     << ",\"enumerated_degree\":";
  if (report.enumerated_degree) {
    os << *report.enumerated_degree;
  } else {
    os << "null";
  }
  os << ",\"consistent\":" << (report.consistent ? "true" : "false")
     << ",\"solution_count\":" << report.solutions_used.size() << ",\"signs\":[";
  for (std::size_t i = 0; i < report.solutions_used.size(); ++i) {
    if (i) os << ",";
    os << report.solutions_used.jacobian_signs[i];
  }
  os << "]}\n";
}

void emit_certificate_json(const AprioriCertificate& cert, std::ostream& os) {
  os << "{\"Lambda\":" << format_number(cert.Lambda)
     << ",\"c1\":" << format_number(cert.c1) << ",\"c2\":" << format_number(cert.c2)
     << ",\"c3\":" << format_number(cert.c3)
     << ",\"alpha\":" << format_number(cert.alpha)
     << ",\"lower\":" << format_number(cert.lower)
     << ",\"upper\":" << format_number(cert.upper) << "}\n";
}

void emit_spectrum_json(const Spectrum& spec, std::ostream& os) {
  os << "{\"eigenvalues\":[";
  for (int i = 0; i < spec.eigenvalues.size(); ++i) {
    if (i) os << ",";
    os << format_number(spec.eigenvalues[i]);
  }
  os << "]}\n";
}

}  // namespace gcsh
