#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hclab/classes.hpp"
#include "hclab/corpus.hpp"
#include "hclab/embedding.hpp"

namespace hclab {

enum class Verdict { Pass, Vacuous, Fail, Skipped };
const char* verdict_name(Verdict v);

// One (statement, group, parameters) evaluation.
struct StatementCheck {
    std::string statement;
    std::string group;
    std::string params;
    bool hypothesis_holds = false;
    std::optional<bool> conclusion_holds; // evaluated when the hypothesis holds
                                          // or in diagnostic mode
    Verdict verdict = Verdict::Vacuous;
    std::string witness;
};

struct HarnessConfig {
    Caps caps;
    bool diagnostic = false;
    int jobs = 1;
    HcVariant hc_variant = HcVariant::Standard;
};

// Everything the statement evaluators read for one corpus group, built once.
// Immutable after construction; evaluators are pure readers.
struct QuotientData {
    GroupPtr q;
    Morphism pi;
    std::vector<Subgroup> q_normals; // ascending (size, bitset)
    bool nilpotent = false;
    bool supersolvable = false;
    bool solvable = false;
};

struct SubgroupEmbedding {
    EmbeddingVerdict h;
    EmbeddingVerdict hc;
    EmbeddingVerdict c_normal;
    EmbeddingVerdict weakly_h;
    bool subnormal = false;
};

struct GroupContext {
    std::string name;
    GroupPtr g;
    SubgroupLattice lat;
    int count = 0; // lattice size

    std::vector<char> le_;      // le_[i*count+j]: lat[i] <= lat[j]
    std::vector<char> norm_in_; // i normal in j (meaningful when le_)
    std::vector<std::vector<int>> normals_in_sub; // per j: K-invariant members of K

    std::vector<int> normal_idx;       // indices of normal subgroups, ascending
    std::vector<Subgroup> normal_subs; // same order

    std::vector<SubgroupEmbedding> emb;
    std::vector<char> cyclic_flag;
    std::vector<char> abelian_flag;

    std::map<int, QuotientData> quotients; // keyed by normal lattice index
    std::map<int, int> fstar_of;           // normal lattice index -> F*(N) index

    int idx_center = -1, idx_frattini = -1, idx_fitting = -1, idx_fstar = -1;
    int idx_hypercenter = -1, idx_residual = -1, idx_socle = -1;

    std::vector<int> primes;
    std::map<int, int> sylow;      // p -> canonical Sylow lattice index
    std::map<int, bool> p_nilp;    // p -> G is p-nilpotent
    bool nilpotent = false, supersolvable = false, solvable = false, tower = false;

    // prime-index subgroups: (supersolvable, solvable) as standalone groups
    std::map<int, std::pair<bool, bool>> sub_formation;

    bool leq(int i, int j) const { return le_[std::size_t(i) * count + j]; }
    bool normal_in(int i, int j) const { return norm_in_[std::size_t(i) * count + j]; }
    const QuotientData& quot(int normal_index) const;
    std::string sub_token(int i) const; // "#i(oK)"
};

GroupContext make_group_context(std::string name, GroupPtr g, const HarnessConfig& cfg);

// One numbered statement of the source material as hypothesis/conclusion
// evaluators over a parameter domain.
struct Statement {
    std::string id;
    std::string title;
    std::function<void(const GroupContext&, const HarnessConfig&, std::vector<StatementCheck>&)>
        run;
};

// L2.1.1-L2.1.4, L2.2.1-L2.2.3, L2.3, L2.4, L2.5.1, L2.5.2, L2.6.1-L2.6.4,
// L2.7-L2.13, T3.1, C3.2, T3.3, T3.4, T3.5, T3.6.
const std::vector<Statement>& statement_registry();
const Statement* find_statement(const std::string& id);

std::vector<StatementCheck> evaluate_statement(const Statement& stmt, const GroupContext& ctx,
                                               const HarnessConfig& cfg);

struct StatementTally {
    int pass = 0, vacuous = 0, fail = 0, skipped = 0;
    // diagnostic mode: tuples where the conclusion is false and the
    // hypothesis correctly came out false too
    int contrapositive = 0;
    int non_vacuous() const { return pass + fail; }
};

struct SuiteReport {
    std::vector<StatementCheck> records; // statement-major, corpus order within
    std::vector<std::pair<std::string, StatementTally>> tallies;
    std::string corpus_version;
    long long wall_ms = 0;
    int fail_count = 0;
    int skip_count = 0;
    bool green() const { return fail_count == 0; }
};

// Evaluates the given statements over the corpus; deterministic output
// independent of the parallelism degree. Throws Error on unknown ids.
SuiteReport verify_suite(const std::vector<std::string>& ids,
                         const std::vector<std::pair<GroupSpec, GroupPtr>>& corpus,
                         const HarnessConfig& cfg);

} // namespace hclab
