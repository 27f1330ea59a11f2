#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pwidth/group.hpp"

namespace pw {

using BigInt = boost::multiprecision::cpp_int;

enum class Family { SL, Sp, SU, GU, PSL, PSU, Alternating, Symmetric, File };

// A parsed group description, e.g. "sl:4:2", "psu:3:5", "an:7", "file:gens.txt".
struct GroupSpec {
    Family family = Family::SL;
    int n = 0;       // rank parameter / degree
    int q = 0;       // field size (prime power)
    std::string path; // for Family::File

    static GroupSpec parse(const std::string& text);
    std::string describe() const;
};

// Generators plus metadata, ready for enumeration.
struct GroupHandle {
    std::string name;
    std::shared_ptr<const ElementOps> ops;
    std::vector<std::string> generators;
    std::optional<BigInt> expected_order; // classical order formula, when known
};

// Builds standard generators for the requested family. Unitary generators
// preserve the antidiagonal Hermitian form, symplectic generators the
// antidiagonal alternating form.
GroupHandle build_group(const GroupSpec& spec, std::size_t bound = default_enumeration_bound());

// Enumerates, taking PSL/PSU through the central quotient.
FiniteGroup realize_group(const GroupSpec& spec, std::size_t bound = default_enumeration_bound());

// Central quotient of an enumerated group: quotient ops over the computed
// center. |G/Z| * |Z| = |G|.
FiniteGroup central_quotient(const FiniteGroup& G, std::size_t bound = default_enumeration_bound());

// Identity plus a single off-diagonal unit entry; order equals l.
Matrix transvection(int n, int l);

// Classical order formulas.
BigInt order_sl(int n, int q);
BigInt order_sp(int n, int q);  // n even
BigInt order_su3(int q);
BigInt order_gu3(int q);

// true iff the multiplicative order of l mod p is p-1.
bool is_primitive_root(long long l, long long p);

struct ArtinWitness {
    long long p;
    GroupSpec sl;
    GroupSpec sp;
    bool sl_enumerable;
    bool sp_enumerable;
};

// All odd primes p <= p_max with l a primitive root mod p, each paired with
// the two witness families SL_{p-1}(l) and Sp_{p-1}(l). Rejects l that is
// a perfect square or l < 2.
std::vector<ArtinWitness> artin_scan(long long l, long long p_max,
                                     std::size_t bound = default_enumeration_bound());

// Generator file: line 1 "degree n", then one permutation per line in cycle
// notation.
std::vector<Permutation> load_generator_file(const std::string& path);
void save_generator_file(const std::string& path, int degree, const std::vector<Permutation>& gens);

// Resolves bundled generator-file names (m11, m12, sz8): looks in
// $PWIDTH_DATA, then ./data/gens and a few parents.
std::string find_data_file(const std::string& name);

// The antidiagonal Hermitian form used by SU3/GU3 constructions; exposed for
// form-preservation checks.
Matrix hermitian_form_su3(const FiniteField& Fq2);
// The alternating form used by Sp constructions.
Matrix symplectic_form(const FiniteField& F, int n);
// conj-transpose(g) * J * g, with conj = q-power Frobenius.
bool preserves_hermitian_form(const Matrix& g, const Matrix& J, int q);
bool preserves_bilinear_form(const Matrix& g, const Matrix& J);

} // namespace pw
