#ifndef IPC_KERNEL_HPP
#define IPC_KERNEL_HPP

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ipc/formula.hpp"

namespace ipc {

// The three axiom schemes:
//   PEIRCE  ((A->B)->A)->A
//   K       A->B->A
//   S       (A->B->C)->(A->B)->A->C
enum class Scheme { Peirce, K, S };

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);  // throws std::invalid_argument
std::size_t scheme_arity(Scheme s);

// Builds the scheme instance; throws std::invalid_argument on an arity mismatch.
Formula instantiate(Scheme s, const std::vector<Formula>& subst);

struct AxiomStep {
  Scheme scheme;
  std::vector<Formula> subst;
};
struct HypStep {
  std::size_t index;
};
// major proves minor -> formula.
struct MpStep {
  std::size_t major;
  std::size_t minor;
};
using Justification = std::variant<AxiomStep, HypStep, MpStep>;

struct Line {
  Formula formula;
  Justification just;
};

// A Hilbert-style derivation from `hypotheses`. Construction does not
// validate; check() does. An empty hypothesis list makes a closed proof.
class Proof {
 public:
  Proof(std::vector<Formula> hypotheses, std::vector<Line> lines)
      : hypotheses_(std::move(hypotheses)), lines_(std::move(lines)) {}

  const std::vector<Formula>& hypotheses() const { return hypotheses_; }
  const std::vector<Line>& lines() const { return lines_; }
  std::size_t size() const { return lines_.size(); }
  bool closed() const { return hypotheses_.empty(); }

  // Formula of the last line; throws std::logic_error on an empty proof.
  const Formula& conclusion() const;

 private:
  std::vector<Formula> hypotheses_;
  std::vector<Line> lines_;
};

class CheckError : public std::runtime_error {
 public:
  CheckError(std::size_t line, const std::string& reason);
  // 0-based index of the first rejected line.
  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

// Returns the conclusion when every line is justified, otherwise throws
// CheckError for the first bad line. An empty proof is rejected at line 0.
Formula check(const Proof& p);

// Schemes cited by axiom lines. Throws CheckError if p is not valid.
std::set<Scheme> used_schemes(const Proof& p);

}  // namespace ipc

#endif
