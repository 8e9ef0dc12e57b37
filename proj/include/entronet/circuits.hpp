#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "entronet/gates.hpp"

// Boolean expressions lowered to NAND-only netlists.
//
// Expression grammar (loosest binding first):
//   expr    := xor ('|' xor)*
//   xor     := and ('^' and)*
//   and     := unary ('&' unary)*
//   unary   := '!' unary | primary
//   primary := '(' expr ')' | identifier       identifier: [A-Za-z_][A-Za-z0-9_]*
//
// Lowering uses the textbook constructions (NOT: 1 gate, AND: 2, OR: 3,
// XOR: 4) with structural sharing: a NAND over the same two operands, in
// either order, is emitted once. Netlists can be evaluated two ways — pure
// boolean NAND, or every gate routed through an observation-network gate
// evaluation — and the two must agree everywhere.
//
// Netlist text format, one statement per line:
//   inputs: a b
//   g1 = NAND(a, b)
//   outputs: g1

namespace entronet {

enum class ExprOp { var, not_op, and_op, or_op, xor_op };

struct BoolExpr {
  ExprOp op = ExprOp::var;
  std::string name;  // var only
  std::shared_ptr<BoolExpr> lhs;
  std::shared_ptr<BoolExpr> rhs;  // binary ops only
};

using BoolExprPtr = std::shared_ptr<BoolExpr>;

// Syntax failure with the byte offset of the offending position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& why, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

BoolExprPtr parse_expression(const std::string& text);

// Variable names, sorted, deduplicated.
std::vector<std::string> expression_variables(const BoolExpr& expr);

// Throws std::invalid_argument if a variable is missing from the assignment.
bool evaluate_expression(const BoolExpr& expr, const std::map<std::string, bool>& assignment);

// Operand of a NAND gate: a primary input or an earlier gate.
struct NetRef {
  bool is_gate = false;
  int index = 0;  // into inputs or gates
  friend auto operator<=>(const NetRef&, const NetRef&) = default;
};

struct NandGate {
  std::string id;  // "g1", "g2", ... in creation order
  NetRef in1;
  NetRef in2;
};

struct NandNetlist {
  std::vector<std::string> inputs;
  std::vector<NandGate> gates;   // topologically ordered by construction
  std::vector<NetRef> outputs;
};

enum class EvalMode { pure, entropy };

NandNetlist synthesize_nand_netlist(const BoolExpr& expr);

// One bool per netlist output. `pure` computes !(x && y) directly; `entropy`
// routes every gate through evaluate_gate (build network, normalise, read
// threshold). Throws std::invalid_argument if an input lacks an assignment.
std::vector<bool> evaluate_netlist(const NandNetlist& netlist,
                                   const std::map<std::string, bool>& assignment,
                                   EvalMode mode = EvalMode::pure);

// Cost summary. Every NAND evaluation spends two observations, so the
// entropy budget is 2 * gate_count splits; the energy budget prices those
// splits at the erasure minimum for the given temperature.
struct NetlistReport {
  int gate_count = 0;
  int depth = 0;  // longest input-to-output gate chain
  int budget_splits = 0;
  double budget_physical_nats = 0.0;
  double budget_joules = 0.0;
};

NetlistReport netlist_report(const NandNetlist& netlist, double kelvin = 300.0);

std::string netlist_to_text(const NandNetlist& netlist);
NandNetlist netlist_from_text(const std::string& text);
NandNetlist load_netlist(const std::string& path);

std::string netlist_to_dot(const NandNetlist& netlist);

}  // namespace entronet
