#ifndef TCMS_BTREE_INDEX_HPP
#define TCMS_BTREE_INDEX_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tcms/tcr_weighting.hpp"

namespace tcms {

/// B-tree order r: maximum child count per node, maximum r-1 keys.
struct IndexConfig {
    int order = 64;
};

/// Keys are terms; each key carries an out-of-node pointer to its weight
/// record. children is empty for leaves, keys.size()+1 entries otherwise.
struct BTreeNode {
    std::vector<std::string> keys;
    std::vector<std::unique_ptr<WeightRecord>> payloads;
    std::vector<std::unique_ptr<BTreeNode>> children;

    bool is_leaf() const { return children.empty(); }
};

/// From-scratch B-tree over terms. Non-root nodes keep at least
/// ceil(r/2)-1 keys; all leaves sit at equal depth. Single writer;
/// concurrent reads are safe once mutation stops.
class BTree {
public:
    explicit BTree(IndexConfig config = {});

    BTree(BTree&&) noexcept;
    BTree& operator=(BTree&&) noexcept;
    BTree(const BTree&) = delete;
    BTree& operator=(const BTree&) = delete;

    /// Deterministic bulk load from records sorted by term: leaves filled
    /// left to right at maximum capacity, internal levels built from the
    /// promoted separators, trailing underflow rebalanced with the left
    /// sibling. Throws DuplicateTerm on a repeated or unsorted input term.
    static BTree bulk_load(const WeightMatrix& matrix, IndexConfig config);

    /// Standard insertion with median split on overflow. An existing term
    /// has its payload replaced and the key count stays unchanged.
    void insert(WeightRecord record);

    /// Record for the term, or nullptr when absent. Visits at most
    /// height() nodes.
    const WeightRecord* search(std::string_view term) const;

    /// Structural invariant check; empty result means valid. Violations
    /// name the offending node by its child path from the root.
    /// expected_weights >= 0 additionally checks every payload width.
    std::vector<std::string> validate(int expected_weights = -1) const;

    /// In-order traversal, ascending by term.
    void for_each(const std::function<void(const WeightRecord&)>& fn) const;

    std::int64_t size() const { return size_; }
    /// Number of nodes on a root-to-leaf path; 0 for an empty tree.
    int height() const;
    int order() const { return order_; }

    const BTreeNode* root() const { return root_.get(); }
    /// Mutable root access for structural tests.
    BTreeNode* root() { return root_.get(); }

    /// Lookup instrumentation: total search() calls and nodes touched.
    std::uint64_t search_calls() const {
        return search_calls_.load(std::memory_order_relaxed);
    }
    std::uint64_t node_visits() const {
        return node_visits_.load(std::memory_order_relaxed);
    }
    void reset_counters() const {
        search_calls_.store(0, std::memory_order_relaxed);
        node_visits_.store(0, std::memory_order_relaxed);
    }

private:
    int min_keys() const { return (order_ + 1) / 2 - 1; }
    bool insert_into(BTreeNode* node, WeightRecord&& record);
    void split_child(BTreeNode* parent, std::size_t child_idx);

    int order_ = 64;
    std::int64_t size_ = 0;
    std::unique_ptr<BTreeNode> root_;
    mutable std::atomic<std::uint64_t> search_calls_{0};
    mutable std::atomic<std::uint64_t> node_visits_{0};
};

/// The trained artifact: term weights behind a B-tree index, plus the class
/// catalog the weights refer to.
struct KnowledgeBase {
    BTree tree;
    std::vector<std::string> class_names;

    static KnowledgeBase build(const WeightMatrix& matrix, IndexConfig config,
                               std::vector<std::string> class_names);

    int class_count() const { return static_cast<int>(class_names.size()); }
    std::int64_t term_count() const { return tree.size(); }
    const WeightRecord* search(std::string_view term) const {
        return tree.search(term);
    }
    void insert(WeightRecord record) { tree.insert(std::move(record)); }
    std::vector<std::string> validate() const {
        return tree.validate(class_count());
    }
};

} // namespace tcms

#endif // TCMS_BTREE_INDEX_HPP
