#include "talbot/talbot_s.hpp"

#include <stdexcept>

namespace talbot {

using nt::Int;

TalbotOrder::TalbotOrder(Int p_, Int q_, int sigma_) : p(p_), q(q_), sigma(sigma_) {
    if (p < 1 || q < 1)
        throw std::domain_error("TalbotOrder: p and q must be positive");
    if (sigma != +1 && sigma != -1)
        throw std::domain_error("TalbotOrder: sigma must be +1 or -1");
    if (nt::gcd(p, q) != 1)
        throw std::domain_error("TalbotOrder: p and q must be coprime");
}

TalbotS compute_s(const TalbotOrder& order) {
    const Int p = order.p, q = order.q;
    if (q == 1) {
        // No integer in [1, 2q-1] = {1} has the required even parity; the
        // series value 1 + q*e_q = 2 keeps every downstream phase formula
        // valid (s enters only through s*n^2/q with n = 0).
        return {2, order};
    }
    Int s;
    if (nt::parity(q) == 0) {
        const Int two_q = nt::checked_mul(2, q);
        s = nt::mod_inverse(nt::mod_floor(p, two_q), two_q);
    } else {
        s = 2 * nt::mod_inverse(nt::mul_mod(2, p, q), q);
    }
    return {s, order};
}

bool verify_s(const TalbotOrder& order, Int s) {
    const Int q = order.q;
    const Int two_q = nt::checked_mul(2, q);
    if (s < 1 || s > two_q - 1) return false;
    const Int target = nt::mod_floor(1 + q * nt::parity(q), two_q);
    if (nt::mul_mod(s, order.p, two_q) != target) return false;
    if (nt::parity(s) != 1 - nt::parity(q)) return false;
    return nt::gcd(s, q) == 1;
}

nt::Int compute_s_alt(const TalbotOrder& order) {
    const Int p = order.p, q = order.q;
    if (q < 2)
        throw std::domain_error("compute_s_alt: requires q >= 2");
    const Int two_q = nt::checked_mul(2, q);
    if (nt::parity(p) == 1 && nt::parity(q) == 1) {
        const Int inv = nt::mod_inverse(nt::mul_mod(2, p, q), q);
        return nt::mul_mod(nt::mul_mod(4, p, two_q), nt::mul_mod(inv, inv, two_q), two_q);
    }
    const Int inv = nt::mod_inverse(nt::mod_floor(p, q), q);
    return nt::mul_mod(p, nt::mul_mod(inv, inv, two_q), two_q);
}

std::optional<nt::Int> closed_form_s(const TalbotOrder& order) {
    const Int p = order.p, q = order.q;
    if (q == 1) return 2;  // both series degenerate to the q = 1 value
    const Int two_q = nt::checked_mul(2, q);
    const Int pr = nt::mod_floor(p, two_q);

    if (pr == 1) return 1 + q * nt::parity(q);
    if (pr == q + 1) return q + 1;
    if (pr == q - 1) return q - 1;

    // q = +-1 + 2np series; only odd q can match since 2np is even.
    const Int two_p = nt::checked_mul(2, p);
    if ((q - 1) % two_p == 0 && (q - 1) / two_p >= 1) {
        const Int n = (q - 1) / two_p;
        return nt::mod_floor(-2 * n, two_q);
    }
    if ((q + 1) % two_p == 0 && (q + 1) / two_p >= 1) {
        const Int n = (q + 1) / two_p;
        return nt::mod_floor(2 * n, two_q);
    }
    return std::nullopt;
}

nt::Int complement_s(const TalbotOrder& order) {
    const Int p = order.p, q = order.q;
    if (p >= q)
        throw std::domain_error("complement_s: requires p < q");
    const Int s = compute_s(order).s;
    if (nt::parity(q) == 1) return 2 * q - s;
    return s <= q - 1 ? q - s : 3 * q - s;
}

const std::optional<nt::Int>& STable::at(Int q, Int p) const {
    if (q < 2 || q > q_max || p < 1 || p > p_max)
        throw std::out_of_range("STable::at: index outside table");
    return cells[static_cast<std::size_t>(q - 2)][static_cast<std::size_t>(p - 1)];
}

STable s_table(Int q_max, Int p_max) {
    if (q_max < 2) throw std::domain_error("s_table: q_max must be >= 2");
    if (p_max < 1) throw std::domain_error("s_table: p_max must be >= 1");
    STable table;
    table.q_max = q_max;
    table.p_max = p_max;
    table.cells.resize(static_cast<std::size_t>(q_max - 1));
    for (Int q = 2; q <= q_max; ++q) {
        auto& row = table.cells[static_cast<std::size_t>(q - 2)];
        row.resize(static_cast<std::size_t>(p_max));
        for (Int p = 1; p <= p_max; ++p) {
            if (nt::gcd(p, q) == 1)
                row[static_cast<std::size_t>(p - 1)] = compute_s(TalbotOrder(p, q)).s;
        }
    }
    return table;
}

} // namespace talbot
