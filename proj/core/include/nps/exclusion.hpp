#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace nps {

enum class Mode { pary, almost };

std::string mode_name(Mode m);          // "pary" / "almost"
Mode mode_from_name(std::string_view);

/// Non-existence rule identifiers. T2* are the p-ary clauses, T4* the
/// almost clauses (one zero symbol), Cor1* the s >= 2 generalization.
/// The _a/_b suffix distinguishes the two quantities a clause can factor
/// ("resp." picks the n - gamma reading in rendered narratives).
enum class Rule {
    Divisibility,
    DeterminantNegative,
    T2i,
    T2ii,
    T2iii,
    T2iv,
    T4i,
    T4ii,
    T4iii_a,
    T4iii_b,
    Cor1_a,
    Cor1_b,
    MultiplierInfeasible,
};

std::string rule_name(Rule r);

/// Machine-checkable non-existence record. Every numeric field can be
/// recomputed from (n, p, gamma, mode, s) alone; bound_lhs/bound_rhs are set
/// exactly when the violated conclusion is an inequality.
struct Certificate {
    Rule rule;
    uint32_t n = 0;
    uint32_t p = 0;
    int64_t gamma = 0;
    Mode mode = Mode::pary;
    uint32_t s = 0;  // zero symbols (0 for p-ary)

    uint64_t q = 0;  // prime of the fired clause (0 when not applicable)
    uint64_t u = 0;  // divisor of the fired clause
    uint32_t r = 0;  // exact power q^r || <clause base>
    std::optional<int64_t> bound_lhs;
    std::optional<int64_t> bound_rhs;
    int64_t aux = 0;    // multiplier t for Rule::MultiplierInfeasible
    std::string note;   // free-form evidence (orbit census, recorded premise)

    /// Appendix-style sentence, e.g.
    /// "not exists by Theorem 2 (ii) with q=3 and u=5".
    std::string narrative() const;
    std::string to_json() const;
};

/// Divisibility gate: p | n - gamma (p-ary) resp. p | n - gamma - 1 (almost,
/// one zero symbol). Returns a certificate iff the divisibility fails.
std::optional<Certificate> check_divisibility(uint32_t n, uint32_t p, int64_t gamma, Mode mode);

/// Determinant criterion: for gamma <= -2 the Gram matrix of the circulant
/// has determinant sign((gamma+1)n - gamma  [p-ary])  resp.
/// sign((gamma+1)n + (s-1)gamma  [almost]); a negative value excludes
/// existence. The binary (n=2, gamma=-2) case has determinant 0 and is never
/// excluded.
std::optional<Certificate> check_determinant(uint32_t n, int64_t gamma, Mode mode, uint32_t s);

/// Clause battery for p-ary sequences (gamma = 0: clause (i); gamma != 0:
/// clauses (ii), (iii), (iv)). Scans clause-major, then q ascending, then u
/// ascending; returns the first violated conclusion. Preconditions: |gamma| <
/// n and the divisibility gate passed.
std::optional<Certificate> exclude_pary(uint32_t n, uint32_t p, int64_t gamma);

/// Clause battery for almost sequences with s zero symbols. s = 1 uses the
/// period-(n+1) clauses ((i) for gamma = 0, (ii) for gamma = -1, (iii) for
/// gamma != 0); s >= 2 has only the corollary rules with u ranging over
/// divisors of n + s.
std::optional<Certificate> exclude_almost(uint32_t n, uint32_t p, int64_t gamma, uint32_t s);

/// Pipeline: determinant rule, divisibility gate, then the clause battery
/// (battery only when |gamma| < n). First certificate wins.
std::optional<Certificate> full_exclusion(uint32_t n, uint32_t p, int64_t gamma, Mode mode,
                                          uint32_t s = 1);

/// Independent re-verifier: given a cited (clause, q, u) for the cell
/// (n, p, gamma, mode, s), recomputes admissibility, the exact power r, the
/// self-conjugacy claim (by brute modular scan) and the bound comparison from
/// scratch, and confirms the clause's conclusion is violated. Deliberately
/// avoids the scanning code paths above.
bool reverify_citation(uint32_t n, uint32_t p, int64_t gamma, Mode mode, uint32_t s, Rule clause,
                       uint64_t q, uint64_t u, std::string* why = nullptr);

bool reverify(const Certificate& cert, std::string* why = nullptr);

}  // namespace nps
