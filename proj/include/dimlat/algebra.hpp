#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "dimlat/chainset.hpp"
#include "dimlat/extval.hpp"

namespace dimlat {

/// Raised when operands belong to different algebras.
class AlgebraMismatch : public DomainError {
  public:
    AlgebraMismatch() : DomainError("operands belong to different algebras") {}
};

enum class FactorKind { IFin, IInf, II1, IIInf, III };

/// Type of one factor summand. Properly infinite types carry the aleph level of
/// their homogeneity cardinal; IFin carries its matrix size.
class AtomType {
  public:
    static AtomType i_fin(long n);
    static AtomType i_inf(int level);
    static AtomType ii_1();
    static AtomType ii_inf(int level);
    static AtomType iii(int level);

    [[nodiscard]] FactorKind kind() const noexcept { return kind_; }
    /// Matrix size; IFin only.
    [[nodiscard]] long size() const noexcept { return n_; }
    /// Homogeneity aleph level; properly infinite kinds only.
    [[nodiscard]] int level() const noexcept { return level_; }

    [[nodiscard]] bool is_finite_type() const noexcept { return kind_ == FactorKind::IFin || kind_ == FactorKind::II1; }
    [[nodiscard]] bool is_properly_infinite() const noexcept { return !is_finite_type(); }
    /// Finite factors carry a faithful trace state; properly infinite ones are
    /// sigma-finite exactly when homogeneous of size aleph 0.
    [[nodiscard]] bool is_sigma_finite() const noexcept { return is_finite_type() || level_ == 0; }

    /// "I_fin(3)", "II_inf(aleph 1)", ...
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const AtomType&, const AtomType&) = default;

  private:
    AtomType(FactorKind k, long n, int level) : kind_{k}, n_{n}, level_{level} {}

    FactorKind kind_;
    long n_ = 0;
    int level_ = 0;
};

/// Which subset of the value chain an element is drawn from.
enum class ClassKind {
    Projection, ///< equivalence classes of projections
    Cone,       ///< classes of the positive cone under Kadison-Pedersen equivalence
};

/// Does v belong to the admissible value set of this atom for the given class kind?
bool admissible(const AtomType& t, const ExtValue& v, ClassKind kind);
/// Is every member of s admissible? (For cone classes on finite-type atoms the set
/// must also be bounded, so that its supremum stays admissible.)
bool admissible_set(const AtomType& t, const ChainSet& s, ClassKind kind);
/// Every admissible projection-class value of the atom.
ChainSet projection_values(const AtomType& t);
/// Dimension value of the identity on an atom of this type.
ExtValue unit_value(const AtomType& t);
/// Human-readable reason v is not admissible (empty when it is).
std::string admissibility_error(const AtomType& t, const ExtValue& v, ClassKind kind);

struct Atom {
    std::string id;
    AtomType type;
    friend bool operator==(const Atom&, const Atom&) = default;
};

class AlgebraDesc;
using AlgebraRef = std::shared_ptr<const AlgebraDesc>;

/// Provenance of an algebra built by amplify().
struct Amplification {
    AlgebraRef base;
    ExtValue index;
};

/// Dimension data of a von Neumann algebra with finite atomic center: one factor per
/// atom of the center. Equality compares atoms only; the name and amplification
/// provenance are labels.
class AlgebraDesc {
  public:
    /// Throws DomainError on an empty list or duplicate ids.
    static AlgebraRef make(std::vector<Atom> atoms, std::string name = {});

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] const std::vector<Atom>& atoms() const { return atoms_; }
    [[nodiscard]] std::size_t size() const { return atoms_.size(); }
    [[nodiscard]] const Atom& atom(std::size_t i) const { return atoms_.at(i); }
    [[nodiscard]] std::optional<std::size_t> index_of(const std::string& id) const;

    /// Largest homogeneity cardinal among properly infinite atoms, aleph 0 if none.
    [[nodiscard]] ExtValue kappa() const;
    [[nodiscard]] bool is_finite() const;
    [[nodiscard]] const std::optional<Amplification>& amplified_from() const { return origin_; }

    friend bool operator==(const AlgebraDesc& a, const AlgebraDesc& b) { return a.atoms_ == b.atoms_; }

    /// "[a: II_1, b: I_fin(3)]"
    [[nodiscard]] std::string to_string() const;

  private:
    friend AlgebraRef amplify(const AlgebraRef& a, const ExtValue& index);

    std::string name_;
    std::vector<Atom> atoms_;
    std::optional<Amplification> origin_;
};

bool same_algebra(const AlgebraRef& a, const AlgebraRef& b);
void require_same_algebra(const AlgebraRef& a, const AlgebraRef& b);

/// Tensoring with B(l^2_I), |I| = index. The index is Fin(m) for a positive integer m
/// or an aleph. Atom ids are kept; the result records its base and index.
AlgebraRef amplify(const AlgebraRef& a, const ExtValue& index);

/// A central projection, i.e. a set of atoms.
class CentralProjection {
  public:
    explicit CentralProjection(AlgebraRef alg);
    CentralProjection(AlgebraRef alg, boost::dynamic_bitset<> bits);
    static CentralProjection all(AlgebraRef alg);
    static CentralProjection of(AlgebraRef alg, const std::vector<std::string>& ids);

    [[nodiscard]] const AlgebraRef& algebra() const { return alg_; }
    [[nodiscard]] const boost::dynamic_bitset<>& bits() const { return bits_; }
    [[nodiscard]] bool contains(std::size_t atom) const { return bits_.test(atom); }
    [[nodiscard]] bool empty() const { return bits_.none(); }
    [[nodiscard]] std::size_t count() const { return bits_.count(); }
    void insert(std::size_t atom) { bits_.set(atom); }

    friend bool operator==(const CentralProjection& a, const CentralProjection& b) {
        return same_algebra(a.alg_, b.alg_) && a.bits_ == b.bits_;
    }

    /// "{a, b}"
    [[nodiscard]] std::string to_string() const;

  private:
    AlgebraRef alg_;
    boost::dynamic_bitset<> bits_;
};

CentralProjection cp_meet(const CentralProjection& a, const CentralProjection& b);
CentralProjection cp_join(const CentralProjection& a, const CentralProjection& b);
CentralProjection cp_complement(const CentralProjection& a);
CentralProjection cp_diff(const CentralProjection& a, const CentralProjection& b);
bool cp_leq(const CentralProjection& a, const CentralProjection& b);

/// A positive central element: one nonnegative rational per atom.
class CentralPositive {
  public:
    CentralPositive(AlgebraRef alg, std::vector<Rational> values);
    static CentralPositive constant(AlgebraRef alg, const Rational& c);

    [[nodiscard]] const AlgebraRef& algebra() const { return alg_; }
    [[nodiscard]] const std::vector<Rational>& values() const { return values_; }
    [[nodiscard]] const Rational& operator[](std::size_t atom) const { return values_.at(atom); }

    friend bool operator==(const CentralPositive& a, const CentralPositive& b) {
        return same_algebra(a.alg_, b.alg_) && a.values_ == b.values_;
    }

  private:
    AlgebraRef alg_;
    std::vector<Rational> values_;
};

} // namespace dimlat
