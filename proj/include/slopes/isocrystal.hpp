#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "slopes/matrix.hpp"
#include "slopes/polygon.hpp"

namespace slopes {

enum class PhiForm { Matrix, DmNormal };

std::string to_string(PhiForm form);
PhiForm parse_phi_form(const std::string& text);

/// One Dieudonne-Manin block: the companion matrix of x^h - p^a on
/// coordinates [offset, offset + h), realizing slope a/h.
struct DmBlock {
    Rational slope;
    std::size_t offset;
    std::size_t size;
    friend bool operator==(const DmBlock&, const DmBlock&) = default;
};

/// Finite (phi, N)-module over Q_p with residue field F_p: phi invertible,
/// N nilpotent, N phi = p phi N.
class PhiModule {
public:
    /// Validates every invariant; a dm-normal module must have phi in
    /// block-companion form with blocks ordered by ascending slope.
    PhiModule(long p, RatMatrix phi, RatMatrix nilpotent, PhiForm form = PhiForm::Matrix);

    /// Dieudonne-Manin normal form with N = 0. A slope a/h (lowest terms) of
    /// multiplicity m contributes m/h blocks; h must divide m.
    static PhiModule from_slopes(const SlopeMultiset& slopes, long p);

    long p() const { return p_; }
    std::size_t rank() const { return phi_.rows(); }
    const RatMatrix& phi() const { return phi_; }
    const RatMatrix& nilpotent() const { return n_; }
    PhiForm form() const { return form_; }
    /// Empty unless form() is DmNormal.
    const std::vector<DmBlock>& blocks() const { return blocks_; }

    SlopeMultiset newton_slopes() const;
    /// v_p(det phi).
    Rational t_n() const;

private:
    long p_;
    RatMatrix phi_;
    RatMatrix n_;
    PhiForm form_;
    std::vector<DmBlock> blocks_;
};

/// True iff N phi = p phi N and N is nilpotent. Throws InvalidInput on size
/// mismatch or singular phi.
bool check_phi_n(long p, const RatMatrix& phi, const RatMatrix& nilpotent);

/// Kronecker product with N (x) 1 + 1 (x) N.
PhiModule tensor(const PhiModule& a, const PhiModule& b);
/// phi^{-T} with -N^T.
PhiModule dual(const PhiModule& a);
/// Top exterior power.
PhiModule det(const PhiModule& a);
PhiModule direct_sum(const PhiModule& a, const PhiModule& b);
/// Same module in the basis given by the columns of s^{-1}: phi -> s phi s^{-1}.
PhiModule change_basis(const PhiModule& a, const RatMatrix& s);

}  // namespace slopes
