#include <string>

#include "qhilb/hilbert.hpp"

namespace qhilb {

std::string tsv_header() { return "alpha\tbeta\torder\tverdict\tmismatch_degree"; }

std::string render_tsv(const IdentityReport& r) {
  std::string line = std::to_string(r.alpha) + "\t" + std::to_string(r.beta) + "\t" +
                     std::to_string(r.order) + "\t";
  if (r.equal()) return line + "equal\t-";
  return line + "mismatch\t" + std::to_string(r.mismatch->degree);
}

std::string render_tree(const IdentityReport& r) {
  const std::string_view sym = symbol(r.lhs.variable());
  std::string out = "report\n";
  out += "  identity: " + std::string(name(r.kind)) + "\n";
  out += "  alpha: " + std::to_string(r.alpha) + "\n";
  out += "  beta: " + std::to_string(r.beta) + "\n";
  out += "  order: " + std::to_string(r.order) + "\n";
  out += "  variable: " + std::string(sym) + "\n";
  out += "  verdict: " + std::string(r.equal() ? "equal" : "mismatch") + "\n";
  if (r.mismatch) {
    out += "  mismatch\n";
    out += "    degree: " + std::to_string(r.mismatch->degree) + "\n";
    out += "    lhs: " + to_string(r.mismatch->lhs, sym) + "\n";
    out += "    rhs: " + to_string(r.mismatch->rhs, sym) + "\n";
  }
  out += "  lhs: " + to_string(r.lhs) + "\n";
  out += "  rhs: " + to_string(r.rhs) + "\n";
  return out;
}

}  // namespace qhilb
