// Walks through a rank-4 skew form on the trivial bundle: first a
// nondegenerate one, then one with a two-dimensional kernel.

#include <iostream>

#include "gitss/gitss.hpp"

using namespace gitss;

namespace {

FormBundle skew_form(bool degenerate) {
  FormBundle fb;
  fb.model.degrees = {0, 0, 0, 0};
  fb.symmetry = Symmetry::Antisymmetric;
  fb.entries = PolyMatrix(4, 4);
  fb.entries(0, 1) = UniPoly{1};
  fb.entries(1, 0) = UniPoly{-1};
  if (!degenerate) {
    fb.entries(2, 3) = UniPoly{1};
    fb.entries(3, 2) = UniPoly{-1};
  }
  return fb;
}

void report(const char* name, const FormBundle& fb) {
  auto verdict = semistable_form(fb, ExhaustiveCoordinate{}, false);
  std::cout << name << ": " << (verdict.satisfied ? "semistable" : "unstable");
  if (verdict.witness) {
    const auto& step = verdict.witness->steps.front();
    std::cout << " (kernel of rank " << step.rank << ", mu = " << to_string(*verdict.witness_mu) << ")";
  }
  std::cout << '\n';
}

}  // namespace

int main() {
  report("standard symplectic form", skew_form(false));
  report("form with 2-dim kernel", skew_form(true));
}
