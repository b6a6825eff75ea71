#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qflab/integers.hpp"
#include "qflab/order.hpp"

namespace qflab {

/* All factorizations of an element into canonical-associate irreducibles.
 * Each multiset is sorted ascending by (norm, coordinates) and multiplies
 * back to the element up to a unit of the parent order. */
struct FactorizationSet {
    OrderElement element;
    std::vector<std::vector<OrderElement>> factorizations;
    std::vector<unsigned> lengths;  // sorted, deduplicated
};

enum class HfdVerdict { certified_hfd, hfd_up_to_bound, not_hfd };
enum class HfdMethod { carlitz, exhaustive };

std::string to_string(HfdVerdict v);

struct HfdWitness {
    OrderElement element;
    std::vector<OrderElement> shorter;  // two factorizations of distinct lengths
    std::vector<OrderElement> longer;
};

struct HfdCertificate {
    QuadraticOrder order;
    HfdVerdict verdict;
    Int bound;  // norm range examined (ignored by the class-number route)
    std::optional<HfdWitness> witness;
    HfdMethod method;

    // Does the certificate guarantee unique factorization lengths at norm n?
    bool covers(const Int& n) const {
        if (verdict == HfdVerdict::certified_hfd) return true;
        if (verdict == HfdVerdict::not_hfd) return false;
        return n <= bound;
    }
};

struct ElasticityResult {
    Rat value;  // max over swept nonunits of (max length / min length)
    std::optional<OrderElement> witness;
    std::vector<OrderElement> shortest, longest;  // extremal factorizations of the witness
};

/* Memoized factorization engine for one order. Not thread-safe; use one
 * instance per worker. All results are independent of call order. */
class FactorContext {
  public:
    explicit FactorContext(QuadraticOrder O, Int budget = Int(1000000000));

    const QuadraticOrder& order() const { return order_; }
    const Int& budget() const { return budget_; }

    const std::vector<OrderElement>& norm_elements(const Int& n);
    // Canonical unit-orbit representatives of norm n, ascending (a, b).
    const std::vector<OrderElement>& canonical_elements_of_norm(const Int& n);
    // The irreducible ones among them.
    const std::vector<OrderElement>& norm_irreducibles(const Int& n);

    bool is_irreducible(const OrderElement& x);

    // Set of factorization lengths of a nonzero nonunit.
    const std::set<unsigned>& length_set(const OrderElement& x);

    // Unique factorization length; 0 for units. Throws AmbiguousLengthError
    // when the length set is not a singleton (a refutation event).
    unsigned unique_length(const OrderElement& x);

    FactorizationSet factorizations(const OrderElement& x);

    std::vector<OrderElement> irreducibles_up_to(const Int& bound);

    HfdCertificate hfd_certify(const Int& bound);

    ElasticityResult elasticity_up_to(const Int& bound);

  private:
    using Key = std::pair<Int, Int>;

    std::vector<std::vector<OrderElement>> enumerate_factorizations(const OrderElement& x);
    HfdWitness carlitz_witness();
    void check_budget(const Int& n) const;

    QuadraticOrder order_;
    Int budget_;
    std::map<Int, std::vector<OrderElement>> elements_cache_;
    std::map<Int, std::vector<OrderElement>> canonical_cache_;
    std::map<Int, std::vector<OrderElement>> irreducible_cache_;
    std::map<Key, std::set<unsigned>> length_cache_;
    std::map<Key, std::vector<std::vector<OrderElement>>> factorization_cache_;
};

// Single-call conveniences (fresh context per call).
bool is_irreducible(const QuadraticOrder& O, const OrderElement& x);
FactorizationSet factorizations(const QuadraticOrder& O, const OrderElement& x);
std::vector<OrderElement> irreducibles_up_to(const QuadraticOrder& O, const Int& bound);
HfdCertificate hfd_certify(const QuadraticOrder& O, const Int& bound);
ElasticityResult elasticity_up_to(const QuadraticOrder& O, const Int& bound);

}  // namespace qflab
