// Walks through the core operations on small matrices.

#include <iostream>

#include "suptrop/suptrop.hpp"

using namespace suptrop;

int main() {
  const Matrix a = parse_matrix("1 0\n2 4");
  std::cout << "A =\n" << a;
  std::cout << "per(A A^t) = " << per(a * transpose(a)) << '\n';
  std::cout << "per(A^t A) = " << per(transpose(a) * a) << "  ("
            << to_string(classify_singularity(transpose(a) * a)) << ")\n\n";

  const Matrix b = parse_matrix("-1 -1\n0 1");
  const QuasiPack q = quasi_pack(b);
  std::cout << "B^nabla =\n" << nabla(b) << "I^l =\n" << q.left << "I^r =\n" << q.right
            << "reversible: " << (q.reversible ? "true" : "false") << "\n\n";

  const Matrix c = parse_matrix("0 -1 _\n_ 0 -2\n-9 _ 0");
  const EdFactorization e = ed_factor(c);
  std::cout << "C =\n" << c << "Gaussians E with E C = C^{nabla nabla}:\n" << format_word(e.word)
            << "C^{nabla nabla} =\n" << e.target << '\n';

  const Matrix m = oracle::random_special(std::uint64_t{42}, 3, oracle::MatrixKind::SL);
  std::cout << "random SL_3 matrix M =\n" << m;
  if (!in_SL1(m)) {
    const PerijWitness w = perij_witness(m);
    std::cout << "witness U (" << to_string(w.mode) << ") =\n" << w.u << "product =\n" << w.product;
  }
  return 0;
}
