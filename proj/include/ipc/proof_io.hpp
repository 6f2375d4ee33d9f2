#ifndef IPC_PROOF_IO_HPP
#define IPC_PROOF_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ipc/kernel.hpp"

namespace ipc {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Document shape:
//   {"hypotheses": [formula...],
//    "lines": [{"formula": f, "just": {"kind": "axiom", "scheme": "K", "subst": [...]}
//                                  | {"kind": "hyp", "index": i}
//                                  | {"kind": "mp", "major": i, "minor": j}}, ...]}
nlohmann::json proof_to_json(const Proof& p);
Proof proof_from_json(const nlohmann::json& doc);  // throws FormatError

// Compact single-document text with a trailing newline.
std::string write_proof(const Proof& p);
Proof read_proof(std::string_view text);  // throws FormatError

}  // namespace ipc

#endif
