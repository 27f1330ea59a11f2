#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pwidth/error.hpp"
#include "pwidth/matrix.hpp"
#include "pwidth/permutation.hpp"

namespace pw {

// Element arithmetic on packed keys. Keys are opaque byte strings; equal
// keys mean equal group elements.
struct ElementOps {
    virtual ~ElementOps() = default;
    virtual std::string identity() const = 0;
    virtual std::string mul(const std::string& a, const std::string& b) const = 0;
    virtual std::string inv(const std::string& a) const = 0;
    virtual std::string describe(const std::string& a) const = 0;
};

struct PermOps final : ElementOps {
    explicit PermOps(int degree) : degree_(degree) {}
    int degree() const { return degree_; }
    std::string identity() const override;
    std::string mul(const std::string& a, const std::string& b) const override;
    std::string inv(const std::string& a) const override;
    std::string describe(const std::string& a) const override;

    static std::string key_of(const Permutation& p);
    static Permutation perm_of(const std::string& key);

private:
    int degree_;
};

struct MatOps final : ElementOps {
    MatOps(const FiniteField& field, int n) : F_(&field), n_(n) {}
    const FiniteField& field() const { return *F_; }
    int dim() const { return n_; }
    std::string identity() const override;
    std::string mul(const std::string& a, const std::string& b) const override;
    std::string inv(const std::string& a) const override;
    std::string describe(const std::string& a) const override;

private:
    const FiniteField* F_;
    int n_;
};

// Cosets of a central subgroup; the key of a coset is the lexicographically
// least base key among its members.
struct QuotientOps final : ElementOps {
    QuotientOps(std::shared_ptr<const ElementOps> base, std::vector<std::string> center_keys)
        : base_(std::move(base)), center_(std::move(center_keys)) {}
    std::string canonical(const std::string& a) const;
    std::string identity() const override { return canonical(base_->identity()); }
    std::string mul(const std::string& a, const std::string& b) const override {
        return canonical(base_->mul(a, b));
    }
    std::string inv(const std::string& a) const override { return canonical(base_->inv(a)); }
    std::string describe(const std::string& a) const override {
        return base_->describe(a) + " Z";
    }
    std::size_t center_order() const { return center_.size(); }

private:
    std::shared_ptr<const ElementOps> base_;
    std::vector<std::string> center_;
};

std::size_t default_enumeration_bound();

// A fully enumerated finite group with index-based arithmetic.
class FiniteGroup {
public:
    FiniteGroup(std::shared_ptr<const ElementOps> ops, std::vector<std::string> generator_keys,
                std::size_t bound = default_enumeration_bound());

    const ElementOps& ops() const { return *ops_; }
    std::shared_ptr<const ElementOps> ops_ptr() const { return ops_; }
    std::size_t size() const { return elements_.size(); }
    std::uint32_t identity_index() const { return id_index_; }
    const std::string& element(std::uint32_t i) const { return elements_[i]; }
    const std::vector<std::string>& generators() const { return gens_; }

    std::uint32_t index_of(const std::string& key) const;
    bool contains(const std::string& key) const { return index_.count(key) != 0; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    long long element_order(std::uint32_t a) const;

private:
    std::shared_ptr<const ElementOps> ops_;
    std::vector<std::string> gens_;
    std::vector<std::string> elements_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::vector<std::uint32_t> inv_;
    std::uint32_t id_index_ = 0;
};

struct ConjugacyClass {
    std::string name;            // ATLAS-style "3A"
    std::uint32_t representative = 0;
    std::vector<std::uint32_t> members;
    std::uint64_t size = 0;
    long long element_order = 1;
    std::uint32_t inverse_class = 0;
    // power_classes[s] = class index of rep^s, s = 0..element_order-1
    std::vector<std::uint32_t> power_classes;
    // power map restricted to primes dividing the exponent
    std::map<long long, std::uint32_t> prime_power;
};

class ClassData {
public:
    explicit ClassData(const FiniteGroup& G);

    const FiniteGroup& group() const { return *G_; }
    std::size_t count() const { return classes_.size(); }
    const ConjugacyClass& cls(std::size_t i) const { return classes_[i]; }
    const std::vector<ConjugacyClass>& all() const { return classes_; }
    std::uint32_t class_of(std::uint32_t element_index) const { return class_of_[element_index]; }
    std::uint32_t identity_class() const { return class_of_[G_->identity_index()]; }
    long long exponent() const { return exponent_; }
    std::uint64_t centralizer_order(std::size_t i) const {
        return static_cast<std::uint64_t>(G_->size()) / classes_[i].size;
    }
    std::optional<std::uint32_t> class_by_name(const std::string& name) const;

    // Classes whose elements have order exactly p; empty when p does not
    // divide |G|.
    std::vector<std::uint32_t> order_p_classes(long long p) const;

private:
    const FiniteGroup* G_;
    std::vector<ConjugacyClass> classes_;
    std::vector<std::uint32_t> class_of_;
    long long exponent_ = 1;
};

// Breadth-first closure of a generator set; deterministic element order.
FiniteGroup enumerate_group(std::shared_ptr<const ElementOps> ops, std::vector<std::string> gens,
                            std::size_t bound = default_enumeration_bound());

// Elements commuting with everything; returned as keys in enumeration order.
std::vector<std::string> center_keys(const FiniteGroup& G);

} // namespace pw
