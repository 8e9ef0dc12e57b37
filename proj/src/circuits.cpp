#include "entronet/circuits.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace entronet {

namespace {

BoolExprPtr make_var(std::string name) {
  auto e = std::make_shared<BoolExpr>();
  e->op = ExprOp::var;
  e->name = std::move(name);
  return e;
}

BoolExprPtr make_unary(ExprOp op, BoolExprPtr operand) {
  auto e = std::make_shared<BoolExpr>();
  e->op = op;
  e->lhs = std::move(operand);
  return e;
}

BoolExprPtr make_binary(ExprOp op, BoolExprPtr lhs, BoolExprPtr rhs) {
  auto e = std::make_shared<BoolExpr>();
  e->op = op;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  BoolExprPtr run() {
    BoolExprPtr expr = parse_or();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return expr;
  }

 private:
  [[noreturn]] void fail(const std::string& why) { throw ParseError(why, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BoolExprPtr parse_or() {
    BoolExprPtr lhs = parse_xor();
    while (accept('|')) lhs = make_binary(ExprOp::or_op, lhs, parse_xor());
    return lhs;
  }

  BoolExprPtr parse_xor() {
    BoolExprPtr lhs = parse_and();
    while (accept('^')) lhs = make_binary(ExprOp::xor_op, lhs, parse_and());
    return lhs;
  }

  BoolExprPtr parse_and() {
    BoolExprPtr lhs = parse_unary();
    while (accept('&')) lhs = make_binary(ExprOp::and_op, lhs, parse_unary());
    return lhs;
  }

  BoolExprPtr parse_unary() {
    if (accept('!')) return make_unary(ExprOp::not_op, parse_unary());
    return parse_primary();
  }

  BoolExprPtr parse_primary() {
    if (accept('(')) {
      BoolExprPtr inner = parse_or();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    skip_ws();
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_'))
        ++pos_;
      return make_var(text_.substr(start, pos_ - start));
    }
    fail("expected an operand");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

void collect_variables(const BoolExpr& expr, std::vector<std::string>& out) {
  switch (expr.op) {
    case ExprOp::var: out.push_back(expr.name); return;
    case ExprOp::not_op: collect_variables(*expr.lhs, out); return;
    case ExprOp::and_op:
    case ExprOp::or_op:
    case ExprOp::xor_op:
      collect_variables(*expr.lhs, out);
      collect_variables(*expr.rhs, out);
      return;
  }
  throw std::logic_error("unhandled ExprOp value");
}

// Emits gates with structural sharing; the NAND operand pair is normalised
// (inputs before gates, then by index) so both orders hit the same entry.
class NetlistBuilder {
 public:
  explicit NetlistBuilder(std::vector<std::string> inputs) {
    netlist_.inputs = std::move(inputs);
    for (int i = 0; i < static_cast<int>(netlist_.inputs.size()); ++i)
      input_index_.emplace(netlist_.inputs[i], i);
  }

  NetRef input(const std::string& name) const {
    return NetRef{false, input_index_.at(name)};
  }

  NetRef nand(NetRef x, NetRef y) {
    if (y < x) std::swap(x, y);
    auto key = std::pair{x, y};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    NandGate gate;
    gate.id = "g" + std::to_string(netlist_.gates.size() + 1);
    gate.in1 = x;
    gate.in2 = y;
    netlist_.gates.push_back(gate);
    NetRef ref{true, static_cast<int>(netlist_.gates.size()) - 1};
    cache_.emplace(key, ref);
    return ref;
  }

  NetRef lower(const BoolExpr& expr) {
    switch (expr.op) {
      case ExprOp::var:
        return input(expr.name);
      case ExprOp::not_op: {
        NetRef x = lower(*expr.lhs);
        return nand(x, x);
      }
      case ExprOp::and_op: {
        NetRef x = lower(*expr.lhs);
        NetRef y = lower(*expr.rhs);
        NetRef n = nand(x, y);
        return nand(n, n);
      }
      case ExprOp::or_op: {
        NetRef x = lower(*expr.lhs);
        NetRef y = lower(*expr.rhs);
        NetRef nx = nand(x, x);
        NetRef ny = nand(y, y);
        return nand(nx, ny);
      }
      case ExprOp::xor_op: {
        NetRef x = lower(*expr.lhs);
        NetRef y = lower(*expr.rhs);
        NetRef n1 = nand(x, y);
        NetRef left = nand(x, n1);
        NetRef right = nand(y, n1);
        return nand(left, right);
      }
    }
    throw std::logic_error("unhandled ExprOp value");
  }

  NandNetlist finish(NetRef output) {
    netlist_.outputs.push_back(output);
    return std::move(netlist_);
  }

 private:
  NandNetlist netlist_;
  std::map<std::string, int> input_index_;
  std::map<std::pair<NetRef, NetRef>, NetRef> cache_;
};

std::string ref_name(const NandNetlist& netlist, NetRef ref) {
  return ref.is_gate ? netlist.gates[ref.index].id : netlist.inputs[ref.index];
}

[[noreturn]] void bad_netlist(int line_no, const std::string& why) {
  throw std::invalid_argument("invalid netlist (line " + std::to_string(line_no) + "): " + why);
}

}  // namespace

ParseError::ParseError(const std::string& why, std::size_t offset)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + why),
      offset_(offset) {}

BoolExprPtr parse_expression(const std::string& text) {
  return Parser(text).run();
}

std::vector<std::string> expression_variables(const BoolExpr& expr) {
  std::vector<std::string> vars;
  collect_variables(expr, vars);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool evaluate_expression(const BoolExpr& expr, const std::map<std::string, bool>& assignment) {
  switch (expr.op) {
    case ExprOp::var: {
      auto it = assignment.find(expr.name);
      if (it == assignment.end())
        throw std::invalid_argument("missing assignment for '" + expr.name + "'");
      return it->second;
    }
    case ExprOp::not_op: return !evaluate_expression(*expr.lhs, assignment);
    case ExprOp::and_op:
      return evaluate_expression(*expr.lhs, assignment) &&
             evaluate_expression(*expr.rhs, assignment);
    case ExprOp::or_op:
      return evaluate_expression(*expr.lhs, assignment) ||
             evaluate_expression(*expr.rhs, assignment);
    case ExprOp::xor_op:
      return evaluate_expression(*expr.lhs, assignment) !=
             evaluate_expression(*expr.rhs, assignment);
  }
  throw std::logic_error("unhandled ExprOp value");
}

NandNetlist synthesize_nand_netlist(const BoolExpr& expr) {
  NetlistBuilder builder(expression_variables(expr));
  NetRef out = builder.lower(expr);
  return builder.finish(out);
}

std::vector<bool> evaluate_netlist(const NandNetlist& netlist,
                                   const std::map<std::string, bool>& assignment, EvalMode mode) {
  std::vector<bool> input_values;
  input_values.reserve(netlist.inputs.size());
  for (const std::string& name : netlist.inputs) {
    auto it = assignment.find(name);
    if (it == assignment.end())
      throw std::invalid_argument("missing assignment for '" + name + "'");
    input_values.push_back(it->second);
  }

  auto value_of = [&](NetRef ref, const std::vector<bool>& gate_values) {
    return ref.is_gate ? gate_values[ref.index] : input_values[ref.index];
  };

  std::vector<bool> gate_values;
  gate_values.reserve(netlist.gates.size());
  for (const NandGate& gate : netlist.gates) {
    const bool x = value_of(gate.in1, gate_values);
    const bool y = value_of(gate.in2, gate_values);
    const bool out = mode == EvalMode::pure
                         ? !(x && y)
                         : evaluate_gate(x, y, GateKind::nand).output;
    gate_values.push_back(out);
  }

  std::vector<bool> outputs;
  outputs.reserve(netlist.outputs.size());
  for (NetRef ref : netlist.outputs) outputs.push_back(value_of(ref, gate_values));
  return outputs;
}

NetlistReport netlist_report(const NandNetlist& netlist, double kelvin) {
  NetlistReport report;
  report.gate_count = static_cast<int>(netlist.gates.size());

  std::vector<int> depth(netlist.gates.size(), 0);
  auto ref_depth = [&](NetRef ref) { return ref.is_gate ? depth[ref.index] : 0; };
  for (std::size_t i = 0; i < netlist.gates.size(); ++i)
    depth[i] = 1 + std::max(ref_depth(netlist.gates[i].in1), ref_depth(netlist.gates[i].in2));
  for (NetRef ref : netlist.outputs) report.depth = std::max(report.depth, ref_depth(ref));

  report.budget_splits = 2 * report.gate_count;
  report.budget_physical_nats = splits_to_physical_nats(report.budget_splits, 1.0);
  report.budget_joules = report.budget_splits * landauer_energy(kelvin);
  return report;
}

std::string netlist_to_text(const NandNetlist& netlist) {
  std::ostringstream out;
  out << "inputs:";
  for (const std::string& name : netlist.inputs) out << ' ' << name;
  out << '\n';
  for (const NandGate& gate : netlist.gates)
    out << gate.id << " = NAND(" << ref_name(netlist, gate.in1) << ", "
        << ref_name(netlist, gate.in2) << ")\n";
  out << "outputs:";
  for (NetRef ref : netlist.outputs) out << ' ' << ref_name(netlist, ref);
  out << '\n';
  return out.str();
}

NandNetlist netlist_from_text(const std::string& text) {
  static const std::regex gate_line(
      R"(^\s*([A-Za-z_]\w*)\s*=\s*NAND\s*\(\s*([A-Za-z_]\w*)\s*,\s*([A-Za-z_]\w*)\s*\)\s*$)");

  NandNetlist netlist;
  std::map<std::string, NetRef> names;
  bool saw_inputs = false, saw_outputs = false;

  auto resolve = [&](const std::string& name, int line_no) {
    auto it = names.find(name);
    if (it == names.end()) bad_netlist(line_no, "unknown operand '" + name + "'");
    return it->second;
  };

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
    if (trimmed.empty() || trimmed[0] == '#') continue;

    if (trimmed.rfind("inputs:", 0) == 0) {
      if (saw_inputs) bad_netlist(line_no, "duplicate inputs line");
      saw_inputs = true;
      std::istringstream fields(trimmed.substr(7));
      std::string name;
      while (fields >> name) {
        if (names.contains(name)) bad_netlist(line_no, "duplicate input '" + name + "'");
        names.emplace(name, NetRef{false, static_cast<int>(netlist.inputs.size())});
        netlist.inputs.push_back(name);
      }
      continue;
    }

    if (trimmed.rfind("outputs:", 0) == 0) {
      if (!saw_inputs) bad_netlist(line_no, "outputs before inputs");
      if (saw_outputs) bad_netlist(line_no, "duplicate outputs line");
      saw_outputs = true;
      std::istringstream fields(trimmed.substr(8));
      std::string name;
      while (fields >> name) netlist.outputs.push_back(resolve(name, line_no));
      if (netlist.outputs.empty()) bad_netlist(line_no, "outputs line names nothing");
      continue;
    }

    std::smatch match;
    if (!std::regex_match(trimmed, match, gate_line))
      bad_netlist(line_no, "expected '<id> = NAND(<x>, <y>)'");
    if (!saw_inputs) bad_netlist(line_no, "gate before inputs line");
    if (saw_outputs) bad_netlist(line_no, "gate after outputs line");
    const std::string id = match[1];
    if (names.contains(id)) bad_netlist(line_no, "duplicate name '" + id + "'");
    NandGate gate;
    gate.id = id;
    gate.in1 = resolve(match[2], line_no);
    gate.in2 = resolve(match[3], line_no);
    names.emplace(id, NetRef{true, static_cast<int>(netlist.gates.size())});
    netlist.gates.push_back(gate);
  }

  if (!saw_inputs) bad_netlist(line_no, "missing inputs line");
  if (!saw_outputs) bad_netlist(line_no, "missing outputs line");
  return netlist;
}

NandNetlist load_netlist(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open netlist file: '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return netlist_from_text(buf.str());
}

std::string netlist_to_dot(const NandNetlist& netlist) {
  std::ostringstream out;
  out << "digraph nand_netlist {\n  rankdir=LR;\n";
  for (const std::string& name : netlist.inputs)
    out << "  \"" << name << "\" [shape=box];\n";
  for (const NandGate& gate : netlist.gates)
    out << "  \"" << gate.id << "\" [shape=oval label=\"NAND\"];\n";
  for (const NandGate& gate : netlist.gates) {
    out << "  \"" << ref_name(netlist, gate.in1) << "\" -> \"" << gate.id << "\";\n";
    out << "  \"" << ref_name(netlist, gate.in2) << "\" -> \"" << gate.id << "\";\n";
  }
  for (std::size_t i = 0; i < netlist.outputs.size(); ++i) {
    out << "  \"out" << i << "\" [shape=plaintext label=\"out" << i << "\"];\n";
    out << "  \"" << ref_name(netlist, netlist.outputs[i]) << "\" -> \"out" << i << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace entronet
