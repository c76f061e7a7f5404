// Copyright 2026 The Fidelis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fidelis/qasm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "fidelis/errors.hpp"

namespace fidelis {
namespace {

enum class Tok { Ident, Real, Int, String, Symbol, Arrow, End };

struct Token {
  Tok kind{Tok::End};
  std::string text;
  std::size_t line{1};
  std::size_t column{1};
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      Token tok;
      tok.line = line_;
      tok.column = column_;
      if (pos_ >= src_.size()) {
        out.push_back(tok);
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        tok.kind = Tok::Ident;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          tok.text += advance();
        }
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        lex_number(tok);
      } else if (c == '"') {
        tok.kind = Tok::String;
        advance();
        while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
          tok.text += advance();
        }
        if (pos_ >= src_.size() || src_[pos_] != '"') {
          throw ParseError("unterminated string", tok.line, tok.column);
        }
        advance();
      } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        tok.kind = Tok::Arrow;
        tok.text = "->";
        advance();
        advance();
      } else if (std::string_view(";,()[]{}+-*/^=").find(c) !=
                 std::string_view::npos) {
        tok.kind = Tok::Symbol;
        tok.text = std::string(1, advance());
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'",
                         tok.line, tok.column);
      }
      out.push_back(std::move(tok));
    }
  }

private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') {
          advance();
        }
      } else {
        return;
      }
    }
  }

  void lex_number(Token& tok) {
    bool real = false;
    auto digits = [&] {
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        tok.text += advance();
      }
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      real = true;
      tok.text += advance();
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      real = true;
      tok.text += advance();
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
        tok.text += advance();
      }
      digits();
    }
    if (tok.text == ".") {
      throw ParseError("malformed number", tok.line, tok.column);
    }
    tok.kind = real ? Tok::Real : Tok::Int;
  }

  std::string_view src_;
  std::size_t pos_{0};
  std::size_t line_{1};
  std::size_t column_{1};
};

struct GateSpelling {
  GateKind kind;
  // Parameters are mapped onto the canonical kind's parameter list.
  enum class Form { Plain, U2, U1, Swap } form{Form::Plain};
};

std::optional<GateSpelling> resolve_gate(std::string_view name) {
  using F = GateSpelling::Form;
  if (auto kind = gate_kind_from_name(name)) {
    return GateSpelling{*kind};
  }
  if (name == "i") return GateSpelling{GateKind::I};
  if (name == "U" || name == "u3") return GateSpelling{GateKind::U};
  if (name == "CX") return GateSpelling{GateKind::CX};
  if (name == "cu1") return GateSpelling{GateKind::CP};
  if (name == "u2") return GateSpelling{GateKind::U, F::U2};
  if (name == "u1" || name == "p") return GateSpelling{GateKind::U, F::U1};
  if (name == "swap") return GateSpelling{GateKind::CX, F::Swap};
  return std::nullopt;
}

struct Operand {
  std::optional<Qubit> index; // nullopt: whole register
  const Token* where{nullptr};
};

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Circuit run() {
    if (peek_ident("OPENQASM")) {
      next();
      const Token& version = next();
      if (version.kind != Tok::Real && version.kind != Tok::Int) {
        fail("expected version number", version);
      }
      if (version.text != "2.0" && version.text != "2") {
        throw UnsupportedError("OpenQASM version " + version.text +
                               " is not supported");
      }
      expect(";");
    }
    while (cur().kind != Tok::End) {
      statement();
    }
    if (!circuit_) {
      throw ParseError("program declares no quantum register", cur().line,
                       cur().column);
    }
    return std::move(*circuit_);
  }

private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::End) {
      ++pos_;
    }
    return t;
  }
  bool peek_symbol(std::string_view s) const {
    return cur().kind == Tok::Symbol && cur().text == s;
  }
  bool peek_ident(std::string_view s) const {
    return cur().kind == Tok::Ident && cur().text == s;
  }

  [[noreturn]] static void fail(const std::string& what, const Token& at) {
    throw ParseError(what, at.line, at.column);
  }

  void expect(std::string_view sym) {
    if (!peek_symbol(sym)) {
      fail("expected '" + std::string(sym) + "'" + found(), cur());
    }
    next();
  }

  std::string found() const {
    if (cur().kind == Tok::End) {
      return " but reached end of input";
    }
    return " but found '" + cur().text + "'";
  }

  const Token& expect_ident() {
    if (cur().kind != Tok::Ident) {
      fail("expected identifier" + found(), cur());
    }
    return next();
  }

  std::size_t expect_int() {
    const Token& t = cur();
    if (t.kind != Tok::Int) {
      fail("expected integer" + found(), t);
    }
    next();
    std::size_t value = 0;
    auto [ptr, ec] =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{}) {
      fail("integer out of range", t);
    }
    return value;
  }

  void statement() {
    const Token& head = cur();
    if (head.kind != Tok::Ident) {
      fail("expected statement" + found(), head);
    }
    const std::string& word = head.text;
    if (word == "include") {
      next();
      if (cur().kind != Tok::String) {
        fail("expected file name" + found(), cur());
      }
      next();
      expect(";");
    } else if (word == "qreg") {
      next();
      const Token& name = expect_ident();
      expect("[");
      const std::size_t size = expect_int();
      expect("]");
      expect(";");
      if (circuit_) {
        throw UnsupportedError("line " + std::to_string(head.line) +
                               ": only a single quantum register is supported");
      }
      if (size == 0) {
        fail("quantum register must have at least one qubit", name);
      }
      qreg_ = name.text;
      circuit_.emplace(size);
    } else if (word == "creg") {
      next();
      expect_ident();
      expect("[");
      expect_int();
      expect("]");
      expect(";");
    } else if (word == "gate" || word == "opaque") {
      throw UnsupportedError("line " + std::to_string(head.line) +
                             ": custom gate definitions are not supported");
    } else if (word == "if") {
      throw UnsupportedError("line " + std::to_string(head.line) +
                             ": classical conditionals are not supported");
    } else if (word == "measure") {
      next();
      const Operand target = operand();
      if (cur().kind != Tok::Arrow) {
        fail("expected '->'" + found(), cur());
      }
      next();
      // Classical targets carry no information for the model.
      expect_ident();
      if (peek_symbol("[")) {
        next();
        expect_int();
        expect("]");
      }
      expect(";");
      if (target.index) {
        circuit_->measure(*target.index);
      } else {
        circuit_->measure_all();
      }
    } else if (word == "barrier") {
      next();
      std::vector<Qubit> qubits;
      bool whole = false;
      for (;;) {
        const Operand op = operand();
        if (op.index) {
          qubits.push_back(*op.index);
        } else {
          whole = true;
        }
        if (!peek_symbol(",")) {
          break;
        }
        next();
      }
      expect(";");
      circuit_->barrier(whole ? std::vector<Qubit>{} : std::move(qubits));
    } else {
      gate_statement();
    }
  }

  Operand operand() {
    const Token& name = expect_ident();
    require_register(name);
    Operand op;
    op.where = &name;
    if (peek_symbol("[")) {
      next();
      const Token& at = cur();
      const std::size_t index = expect_int();
      expect("]");
      if (index >= circuit_->n_qubits()) {
        fail("qubit index " + std::to_string(index) + " out of range for " +
                 qreg_ + "[" + std::to_string(circuit_->n_qubits()) + "]",
             at);
      }
      op.index = static_cast<Qubit>(index);
    }
    return op;
  }

  void require_register(const Token& name) {
    if (!circuit_) {
      fail("quantum register used before declaration", name);
    }
    if (name.text != qreg_) {
      fail("unknown quantum register '" + name.text + "'", name);
    }
  }

  void gate_statement() {
    const Token& name = next();
    if (name.text == "reset") {
      throw UnsupportedGateError("reset");
    }
    auto spelling = resolve_gate(name.text);
    if (!spelling) {
      throw UnsupportedGateError(name.text);
    }
    std::vector<double> params;
    if (peek_symbol("(")) {
      next();
      if (!peek_symbol(")")) {
        params.push_back(expression());
        while (peek_symbol(",")) {
          next();
          params.push_back(expression());
        }
      }
      expect(")");
    }
    std::vector<Operand> operands{operand()};
    while (peek_symbol(",")) {
      next();
      operands.push_back(operand());
    }
    expect(";");

    using F = GateSpelling::Form;
    std::size_t expected_params = param_arity(spelling->kind);
    std::size_t expected_qubits = qubit_arity(spelling->kind);
    switch (spelling->form) {
    case F::U2: expected_params = 2; break;
    case F::U1: expected_params = 1; break;
    case F::Swap: expected_params = 0; break;
    case F::Plain: break;
    }
    if (params.size() != expected_params) {
      fail("gate '" + name.text + "' expects " +
               std::to_string(expected_params) + " parameter(s), got " +
               std::to_string(params.size()),
           name);
    }
    if (operands.size() != expected_qubits) {
      fail("gate '" + name.text + "' expects " +
               std::to_string(expected_qubits) + " qubit argument(s), got " +
               std::to_string(operands.size()),
           name);
    }
    switch (spelling->form) {
    case F::U2:
      params = {std::numbers::pi / 2, params[0], params[1]};
      break;
    case F::U1:
      params = {0.0, 0.0, params[0]};
      break;
    default:
      break;
    }

    // Whole-register operands broadcast over every qubit.
    const bool broadcast = std::any_of(operands.begin(), operands.end(),
                                       [](const Operand& o) { return !o.index; });
    const std::size_t reps = broadcast ? circuit_->n_qubits() : 1;
    for (std::size_t r = 0; r < reps; ++r) {
      std::vector<Qubit> qubits;
      for (const auto& op : operands) {
        qubits.push_back(op.index ? *op.index : static_cast<Qubit>(r));
      }
      try {
        if (spelling->form == F::Swap) {
          Gate::make(GateKind::CX, qubits); // validates distinctness
          circuit_->append(GateKind::CX, {qubits[0], qubits[1]});
          circuit_->append(GateKind::CX, {qubits[1], qubits[0]});
          circuit_->append(GateKind::CX, {qubits[0], qubits[1]});
        } else {
          circuit_->append(spelling->kind, std::move(qubits), params);
        }
      } catch (const ParseError&) {
        throw;
      } catch (const InputError& e) {
        fail(e.what(), name);
      }
    }
  }

  // expr := term (('+'|'-') term)*
  double expression() {
    double value = term();
    while (peek_symbol("+") || peek_symbol("-")) {
      const bool plus = next().text == "+";
      const double rhs = term();
      value = plus ? value + rhs : value - rhs;
    }
    return value;
  }

  double term() {
    double value = power();
    while (peek_symbol("*") || peek_symbol("/")) {
      const bool times = next().text == "*";
      const double rhs = power();
      value = times ? value * rhs : value / rhs;
    }
    return value;
  }

  double power() {
    const double base = unary();
    if (peek_symbol("^")) {
      next();
      return std::pow(base, power());
    }
    return base;
  }

  double unary() {
    if (peek_symbol("-")) {
      next();
      return -unary();
    }
    if (peek_symbol("+")) {
      next();
      return unary();
    }
    return primary();
  }

  double primary() {
    const Token& t = cur();
    if (t.kind == Tok::Real || t.kind == Tok::Int) {
      next();
      double value = 0.0;
      auto [ptr, ec] =
          std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
      if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
        fail("malformed number '" + t.text + "'", t);
      }
      return value;
    }
    if (peek_symbol("(")) {
      next();
      const double value = expression();
      expect(")");
      return value;
    }
    if (t.kind == Tok::Ident) {
      next();
      if (t.text == "pi") {
        return std::numbers::pi;
      }
      double (*fn)(double) = nullptr;
      if (t.text == "sin") fn = [](double x) { return std::sin(x); };
      else if (t.text == "cos") fn = [](double x) { return std::cos(x); };
      else if (t.text == "tan") fn = [](double x) { return std::tan(x); };
      else if (t.text == "exp") fn = [](double x) { return std::exp(x); };
      else if (t.text == "ln") fn = [](double x) { return std::log(x); };
      else if (t.text == "sqrt") fn = [](double x) { return std::sqrt(x); };
      if (fn == nullptr) {
        fail("unknown identifier '" + t.text + "' in expression", t);
      }
      expect("(");
      const double arg = expression();
      expect(")");
      return fn(arg);
    }
    fail("expected expression" + found(), t);
  }

  std::vector<Token> toks_;
  std::size_t pos_{0};
  std::optional<Circuit> circuit_;
  std::string qreg_;
};

std::string format_param(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

} // namespace

Circuit parse_qasm(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

Circuit load_qasm_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open QASM file '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_qasm(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line(), e.column());
  }
}

std::string emit_qasm(const Circuit& circ) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out << "qreg q[" << circ.n_qubits() << "];\n";
  if (!circ.measured_qubits().empty()) {
    out << "creg c[" << circ.n_qubits() << "];\n";
  }
  const auto gates = circ.gates();
  const auto barriers = circ.barriers();
  auto next_barrier = barriers.begin();
  for (std::size_t i = 0; i <= gates.size(); ++i) {
    for (; next_barrier != barriers.end() && next_barrier->position == i;
         ++next_barrier) {
      out << "barrier ";
      if (next_barrier->qubits.empty()) {
        out << "q";
      }
      for (std::size_t k = 0; k < next_barrier->qubits.size(); ++k) {
        out << (k ? "," : "") << "q[" << next_barrier->qubits[k] << "]";
      }
      out << ";\n";
    }
    if (i == gates.size()) {
      break;
    }
    const Gate& g = gates[i];
    out << gate_name(g.kind);
    if (!g.params.empty()) {
      out << "(";
      for (std::size_t k = 0; k < g.params.size(); ++k) {
        out << (k ? "," : "") << format_param(g.params[k]);
      }
      out << ")";
    }
    for (std::size_t k = 0; k < g.qubits.size(); ++k) {
      out << (k ? "," : " ") << "q[" << g.qubits[k] << "]";
    }
    out << ";\n";
  }
  for (auto q : circ.measured_qubits()) {
    out << "measure q[" << q << "] -> c[" << q << "];\n";
  }
  return out.str();
}

} // namespace fidelis
