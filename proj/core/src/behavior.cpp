#include "netcert/behavior.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace netcert {

long Scenario::input_tuples() const {
  long n = 1;
  for (const auto& p : parties) n *= p.num_inputs;
  return n;
}

long Scenario::output_tuples() const {
  long n = 1;
  for (const auto& p : parties) n *= p.num_outputs;
  return n;
}

void validate(const Scenario& s) {
  if (s.parties.empty()) throw argument_error("scenario has no parties");
  for (const auto& p : s.parties) {
    if (p.num_inputs < 1) throw argument_error("party needs >= 1 input");
    if (p.num_outputs < 2) throw argument_error("party needs >= 2 outputs");
  }
  for (size_t i = 0; i < s.parties.size(); ++i)
    for (size_t j = i + 1; j < s.parties.size(); ++j)
      if (s.parties[i].name == s.parties[j].name)
        throw argument_error("duplicate party name " + s.parties[i].name);
}

long Behavior::input_index(const std::vector<int>& inputs) const {
  long idx = 0;
  for (size_t p = 0; p < scenario.parties.size(); ++p) {
    if (inputs[p] < 0 || inputs[p] >= scenario.parties[p].num_inputs)
      throw argument_error("input index out of range");
    idx = idx * scenario.parties[p].num_inputs + inputs[p];
  }
  return idx;
}

long Behavior::output_index(const std::vector<int>& outputs) const {
  long idx = 0;
  for (size_t p = 0; p < scenario.parties.size(); ++p) {
    if (outputs[p] < 0 || outputs[p] >= scenario.parties[p].num_outputs)
      throw argument_error("output index out of range");
    idx = idx * scenario.parties[p].num_outputs + outputs[p];
  }
  return idx;
}

double Behavior::prob(const std::vector<int>& inputs,
                      const std::vector<int>& outputs) const {
  return table[size_t(input_index(inputs) * scenario.output_tuples() +
                      output_index(outputs))];
}

double& Behavior::at(long x_index, long a_index) {
  return table[size_t(x_index * scenario.output_tuples() + a_index)];
}

double Behavior::at(long x_index, long a_index) const {
  return table[size_t(x_index * scenario.output_tuples() + a_index)];
}

void validate(const Behavior& b) {
  validate(b.scenario);
  const long nx = b.scenario.input_tuples();
  const long na = b.scenario.output_tuples();
  if (long(b.table.size()) != nx * na)
    throw argument_error("behavior table has wrong length");
  const double tol = tolerance();
  for (double p : b.table)
    if (p < -tol || p > 1.0 + tol)
      throw argument_error("behavior entry outside [0,1]");
  for (long x = 0; x < nx; ++x) {
    double sum = 0;
    for (long a = 0; a < na; ++a) sum += b.at(x, a);
    if (std::abs(sum - 1.0) > tol)
      throw argument_error("behavior not normalized for some input");
  }
}

namespace {

// Mixed-radix counter over per-party cardinalities.
bool advance(std::vector<int>& digits, const std::vector<int>& radix) {
  for (int p = int(digits.size()) - 1; p >= 0; --p) {
    if (++digits[size_t(p)] < radix[size_t(p)]) return true;
    digits[size_t(p)] = 0;
  }
  return false;
}

std::vector<int> input_radix(const Scenario& s) {
  std::vector<int> r;
  for (const auto& p : s.parties) r.push_back(p.num_inputs);
  return r;
}

std::vector<int> output_radix(const Scenario& s) {
  std::vector<int> r;
  for (const auto& p : s.parties) r.push_back(p.num_outputs);
  return r;
}

int bit_width(int num_outputs) {
  int w = 0;
  while ((1 << w) < num_outputs) ++w;
  return std::max(w, 1);
}

double sign_of(int output, int num_outputs, const SignRule& rule) {
  if (rule.bit < 0) return __builtin_popcount(unsigned(output)) % 2 ? -1.0 : 1.0;
  const int w = bit_width(num_outputs);
  if (rule.bit >= w) throw argument_error("sign bit out of range");
  return (output >> (w - 1 - rule.bit)) & 1 ? -1.0 : 1.0;
}

}  // namespace

double correlator(const Behavior& b, const std::vector<int>& settings,
                  const std::vector<SignRule>& signs) {
  const auto& sc = b.scenario;
  if (int(settings.size()) != sc.num_parties() ||
      int(signs.size()) != sc.num_parties())
    throw argument_error("one setting and sign rule per party required");
  const long x = b.input_index(settings);
  std::vector<int> a(size_t(sc.num_parties()), 0);
  const auto radix = output_radix(sc);
  double total = 0;
  long a_index = 0;
  do {
    double sign = 1.0;
    for (size_t p = 0; p < a.size(); ++p)
      sign *= sign_of(a[p], radix[p], signs[p]);
    total += sign * b.at(x, a_index);
    ++a_index;
  } while (advance(a, radix));
  return total;
}

std::vector<std::string> check_no_signaling(const Behavior& b) {
  const auto& sc = b.scenario;
  const double tol = tolerance();
  std::vector<std::string> violations;
  const auto in_radix = input_radix(sc);
  const auto out_radix = output_radix(sc);

  for (int p = 0; p < sc.num_parties(); ++p) {
    for (int q = 0; q < sc.num_parties(); ++q) {
      if (p == q || sc.parties[size_t(q)].num_inputs < 2) continue;
      // Marginal of party p must not depend on party q's input.
      double worst = 0;
      std::vector<int> x(size_t(sc.num_parties()), 0);
      do {
        if (x[size_t(q)] != 0) continue;
        for (int ap = 0; ap < sc.parties[size_t(p)].num_outputs; ++ap) {
          double base = 0;
          bool have_base = false;
          for (int xq = 0; xq < sc.parties[size_t(q)].num_inputs; ++xq) {
            std::vector<int> ctx = x;
            ctx[size_t(q)] = xq;
            const long xi = b.input_index(ctx);
            double marg = 0;
            std::vector<int> a(size_t(sc.num_parties()), 0);
            long ai = 0;
            do {
              if (a[size_t(p)] == ap) marg += b.at(xi, ai);
              ++ai;
            } while (advance(a, out_radix));
            if (!have_base) {
              base = marg;
              have_base = true;
            } else {
              worst = std::max(worst, std::abs(marg - base));
            }
          }
        }
      } while (advance(x, in_radix));
      if (worst > tol) {
        std::ostringstream os;
        os << "marginal of " << sc.parties[size_t(p)].name
           << " depends on input of " << sc.parties[size_t(q)].name
           << " (max deviation " << worst << ")";
        violations.push_back(os.str());
      }
    }
  }
  return violations;
}

Behavior marginalize_behavior(const Behavior& b, const std::string& drop_party,
                              int fixed_input) {
  const auto& sc = b.scenario;
  int d = -1;
  for (int p = 0; p < sc.num_parties(); ++p)
    if (sc.parties[size_t(p)].name == drop_party) d = p;
  if (d < 0) throw argument_error("unknown party " + drop_party);
  if (fixed_input < 0 || fixed_input >= sc.parties[size_t(d)].num_inputs)
    throw argument_error("fixed_input out of range");

  Behavior out;
  for (int p = 0; p < sc.num_parties(); ++p)
    if (p != d) out.scenario.parties.push_back(sc.parties[size_t(p)]);
  out.table.assign(size_t(out.scenario.input_tuples() *
                          out.scenario.output_tuples()),
                   0.0);

  const auto in_radix = input_radix(out.scenario);
  const auto out_radix = output_radix(out.scenario);
  std::vector<int> x(size_t(out.scenario.num_parties()), 0);
  long xi = 0;
  do {
    std::vector<int> full_x;
    for (int p = 0, k = 0; p < sc.num_parties(); ++p)
      full_x.push_back(p == d ? fixed_input : x[size_t(k++)]);
    const long fxi = b.input_index(full_x);
    std::vector<int> a(size_t(out.scenario.num_parties()), 0);
    long ai = 0;
    do {
      double sum = 0;
      for (int ad = 0; ad < sc.parties[size_t(d)].num_outputs; ++ad) {
        std::vector<int> full_a;
        for (int p = 0, k = 0; p < sc.num_parties(); ++p)
          full_a.push_back(p == d ? ad : a[size_t(k++)]);
        sum += b.at(fxi, b.output_index(full_a));
      }
      out.at(xi, ai) = sum;
      ++ai;
    } while (advance(a, out_radix));
    ++xi;
  } while (advance(x, in_radix));
  return out;
}

}  // namespace netcert
