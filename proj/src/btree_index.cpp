#include "tcms/btree_index.hpp"

#include <algorithm>
#include <cassert>

#include "tcms/errors.hpp"

namespace tcms {
namespace {

std::size_t key_position(const BTreeNode& node, std::string_view term) {
    auto it = std::lower_bound(node.keys.begin(), node.keys.end(), term);
    return static_cast<std::size_t>(it - node.keys.begin());
}

std::unique_ptr<WeightRecord> clone(const WeightRecord& rec) {
    return std::make_unique<WeightRecord>(rec);
}

} // namespace

BTree::BTree(IndexConfig config) : order_(config.order) {
    assert(order_ >= 3);
}

BTree::BTree(BTree&& other) noexcept
    : order_(other.order_), size_(other.size_), root_(std::move(other.root_)) {
    other.size_ = 0;
}

BTree& BTree::operator=(BTree&& other) noexcept {
    order_ = other.order_;
    size_ = other.size_;
    root_ = std::move(other.root_);
    other.size_ = 0;
    return *this;
}

BTree BTree::bulk_load(const WeightMatrix& matrix, IndexConfig config) {
    BTree tree(config);
    const auto& records = matrix.records;
    const std::size_t n = records.size();
    for (std::size_t i = 1; i < n; ++i)
        if (!(records[i - 1].term < records[i].term))
            throw DuplicateTerm("bulk load input not strictly sorted at: " +
                                records[i].term);
    if (n == 0) return tree;

    const std::size_t max_keys = static_cast<std::size_t>(config.order) - 1;
    const std::size_t min = static_cast<std::size_t>(tree.min_keys());

    // Leaf level: maximal fills, one separator promoted between leaves.
    std::vector<std::unique_ptr<BTreeNode>> level;
    std::vector<std::unique_ptr<WeightRecord>> seps;
    std::size_t i = 0;
    while (i < n) {
        auto leaf = std::make_unique<BTreeNode>();
        std::size_t take = std::min(max_keys, n - i);
        for (std::size_t k = 0; k < take; ++k, ++i) {
            leaf->keys.push_back(records[i].term);
            leaf->payloads.push_back(clone(records[i]));
        }
        level.push_back(std::move(leaf));
        if (i < n) {
            seps.push_back(clone(records[i]));
            ++i;
            // Separator swallowed the final record; the empty right leaf
            // is fixed by the trailing rebalance below.
            if (i == n) level.push_back(std::make_unique<BTreeNode>());
        }
    }

    // Redistributes keys (and children, on internal levels) between the two
    // rightmost nodes of a level when the last one fell below minimum.
    auto rebalance_last = [&](std::vector<std::unique_ptr<BTreeNode>>& nodes,
                              std::vector<std::unique_ptr<WeightRecord>>& ps) {
        if (nodes.size() < 2 || nodes.back()->keys.size() >= min) return;
        BTreeNode& right = *nodes.back();
        BTreeNode& left = *nodes[nodes.size() - 2];

        std::vector<std::string> keys = std::move(left.keys);
        std::vector<std::unique_ptr<WeightRecord>> pay = std::move(left.payloads);
        keys.push_back(ps.back()->term);
        pay.push_back(std::move(ps.back()));
        for (std::size_t k = 0; k < right.keys.size(); ++k) {
            keys.push_back(std::move(right.keys[k]));
            pay.push_back(std::move(right.payloads[k]));
        }
        std::vector<std::unique_ptr<BTreeNode>> kids;
        for (auto& c : left.children) kids.push_back(std::move(c));
        for (auto& c : right.children) kids.push_back(std::move(c));

        std::size_t total = keys.size();
        std::size_t left_n = (total - 1 + 1) / 2; // == ceil((total-1)/2)
        left.keys.assign(keys.begin(), keys.begin() + left_n);
        left.payloads.clear();
        for (std::size_t k = 0; k < left_n; ++k)
            left.payloads.push_back(std::move(pay[k]));
        ps.back() = std::move(pay[left_n]);
        right.keys.assign(keys.begin() + left_n + 1, keys.end());
        right.payloads.clear();
        for (std::size_t k = left_n + 1; k < total; ++k)
            right.payloads.push_back(std::move(pay[k]));
        if (!kids.empty()) {
            left.children.clear();
            right.children.clear();
            for (std::size_t k = 0; k < left_n + 1; ++k)
                left.children.push_back(std::move(kids[k]));
            for (std::size_t k = left_n + 1; k < kids.size(); ++k)
                right.children.push_back(std::move(kids[k]));
        }
    };

    rebalance_last(level, seps);

    // Build internal levels until a single root remains.
    while (level.size() > 1) {
        std::vector<std::unique_ptr<BTreeNode>> children = std::move(level);
        std::vector<std::unique_ptr<WeightRecord>> child_seps = std::move(seps);
        level.clear();
        seps.clear();
        const std::size_t total_seps = child_seps.size();
        std::size_t si = 0, ci = 0;
        while (true) {
            auto node = std::make_unique<BTreeNode>();
            std::size_t take = std::min(max_keys, total_seps - si);
            for (std::size_t k = 0; k < take; ++k, ++si) {
                node->keys.push_back(child_seps[si]->term);
                node->payloads.push_back(std::move(child_seps[si]));
            }
            for (std::size_t k = 0; k < take + 1; ++k, ++ci)
                node->children.push_back(std::move(children[ci]));
            level.push_back(std::move(node));
            if (si >= total_seps) break;
            seps.push_back(std::move(child_seps[si]));
            ++si;
        }
        assert(ci == children.size());
        rebalance_last(level, seps);
    }

    tree.root_ = std::move(level.front());
    tree.size_ = static_cast<std::int64_t>(n);
    return tree;
}

void BTree::insert(WeightRecord record) {
    if (!root_) {
        root_ = std::make_unique<BTreeNode>();
        root_->keys.push_back(record.term);
        root_->payloads.push_back(
            std::make_unique<WeightRecord>(std::move(record)));
        size_ = 1;
        return;
    }
    if (insert_into(root_.get(), std::move(record))) ++size_;
    if (root_->keys.size() == static_cast<std::size_t>(order_)) {
        auto new_root = std::make_unique<BTreeNode>();
        new_root->children.push_back(std::move(root_));
        root_ = std::move(new_root);
        split_child(root_.get(), 0);
    }
}

bool BTree::insert_into(BTreeNode* node, WeightRecord&& record) {
    std::size_t pos = key_position(*node, record.term);
    if (pos < node->keys.size() && node->keys[pos] == record.term) {
        *node->payloads[pos] = std::move(record);
        return false;
    }
    if (node->is_leaf()) {
        node->keys.insert(node->keys.begin() + pos, record.term);
        node->payloads.insert(
            node->payloads.begin() + pos,
            std::make_unique<WeightRecord>(std::move(record)));
        return true;
    }
    bool added = insert_into(node->children[pos].get(), std::move(record));
    if (node->children[pos]->keys.size() == static_cast<std::size_t>(order_))
        split_child(node, pos);
    return added;
}

void BTree::split_child(BTreeNode* parent, std::size_t child_idx) {
    BTreeNode& child = *parent->children[child_idx];
    const std::size_t mid = child.keys.size() / 2;

    auto right = std::make_unique<BTreeNode>();
    right->keys.assign(child.keys.begin() + mid + 1, child.keys.end());
    for (std::size_t k = mid + 1; k < child.payloads.size(); ++k)
        right->payloads.push_back(std::move(child.payloads[k]));
    if (!child.is_leaf())
        for (std::size_t k = mid + 1; k < child.children.size(); ++k)
            right->children.push_back(std::move(child.children[k]));

    parent->keys.insert(parent->keys.begin() + child_idx, child.keys[mid]);
    parent->payloads.insert(parent->payloads.begin() + child_idx,
                            std::move(child.payloads[mid]));
    child.keys.resize(mid);
    child.payloads.resize(mid);
    if (!child.is_leaf()) child.children.resize(mid + 1);

    parent->children.insert(parent->children.begin() + child_idx + 1,
                            std::move(right));
}

const WeightRecord* BTree::search(std::string_view term) const {
    search_calls_.fetch_add(1, std::memory_order_relaxed);
    const BTreeNode* node = root_.get();
    while (node) {
        node_visits_.fetch_add(1, std::memory_order_relaxed);
        std::size_t pos = key_position(*node, term);
        if (pos < node->keys.size() && node->keys[pos] == term)
            return node->payloads[pos].get();
        if (node->is_leaf()) return nullptr;
        node = node->children[pos].get();
    }
    return nullptr;
}

int BTree::height() const {
    int h = 0;
    for (const BTreeNode* node = root_.get(); node;
         node = node->is_leaf() ? nullptr : node->children.front().get())
        ++h;
    return h;
}

void BTree::for_each(
    const std::function<void(const WeightRecord&)>& fn) const {
    std::function<void(const BTreeNode*)> walk = [&](const BTreeNode* node) {
        if (!node) return;
        for (std::size_t k = 0; k < node->keys.size(); ++k) {
            if (!node->is_leaf()) walk(node->children[k].get());
            fn(*node->payloads[k]);
        }
        if (!node->is_leaf()) walk(node->children.back().get());
    };
    walk(root_.get());
}

std::vector<std::string> BTree::validate(int expected_weights) const {
    std::vector<std::string> violations;
    if (!root_) {
        if (size_ != 0)
            violations.push_back("empty tree but size() = " +
                                 std::to_string(size_));
        return violations;
    }

    const std::size_t max_keys = static_cast<std::size_t>(order_) - 1;
    const std::size_t min = static_cast<std::size_t>(min_keys());
    int leaf_depth = -1;

    std::function<void(const BTreeNode*, const std::string&, int)> check =
        [&](const BTreeNode* node, const std::string& path, int depth) {
            auto flag = [&](const std::string& what) {
                violations.push_back(path + ": " + what);
            };
            if (node->keys.size() > max_keys)
                flag("holds " + std::to_string(node->keys.size()) +
                     " keys, max is " + std::to_string(max_keys));
            bool is_root = node == root_.get();
            if (is_root) {
                if (node->keys.empty()) flag("root has no keys");
            } else if (node->keys.size() < min) {
                flag("holds " + std::to_string(node->keys.size()) +
                     " keys, min is " + std::to_string(min));
            }
            for (std::size_t k = 1; k < node->keys.size(); ++k)
                if (!(node->keys[k - 1] < node->keys[k]))
                    flag("keys not strictly sorted at slot " +
                         std::to_string(k));
            if (node->payloads.size() != node->keys.size()) {
                flag("payload count does not match key count");
            } else {
                for (std::size_t k = 0; k < node->keys.size(); ++k) {
                    if (!node->payloads[k]) {
                        flag("null payload at slot " + std::to_string(k));
                    } else {
                        if (node->payloads[k]->term != node->keys[k])
                            flag("payload term mismatch at slot " +
                                 std::to_string(k));
                        if (expected_weights >= 0 &&
                            node->payloads[k]->weights.size() !=
                                static_cast<std::size_t>(expected_weights))
                            flag("payload weight width mismatch at slot " +
                                 std::to_string(k));
                    }
                }
            }
            if (node->is_leaf()) {
                if (leaf_depth < 0) leaf_depth = depth;
                else if (depth != leaf_depth)
                    flag("leaf depth " + std::to_string(depth) +
                         " differs from " + std::to_string(leaf_depth));
                return;
            }
            if (node->children.size() != node->keys.size() + 1) {
                flag("child count is not key count + 1");
                return;
            }
            for (std::size_t k = 0; k < node->children.size(); ++k) {
                if (!node->children[k]) {
                    flag("null child at slot " + std::to_string(k));
                    continue;
                }
                check(node->children[k].get(), path + "." + std::to_string(k),
                      depth + 1);
            }
        };
    check(root_.get(), "root", 0);

    // Global key order and size consistency via in-order traversal.
    std::int64_t seen = 0;
    const std::string* prev = nullptr;
    bool order_reported = false;
    for_each([&](const WeightRecord& rec) {
        if (prev && !(*prev < rec.term) && !order_reported) {
            violations.push_back("tree: in-order traversal not strictly "
                                 "increasing at term " + rec.term);
            order_reported = true;
        }
        prev = &rec.term;
        ++seen;
    });
    if (seen != size_)
        violations.push_back("tree: reachable keys " + std::to_string(seen) +
                             " != size() " + std::to_string(size_));
    return violations;
}

KnowledgeBase KnowledgeBase::build(const WeightMatrix& matrix,
                                   IndexConfig config,
                                   std::vector<std::string> class_names) {
    if (matrix.class_count != static_cast<int>(class_names.size()))
        throw Error("weight matrix class count does not match class names");
    KnowledgeBase kb{BTree::bulk_load(matrix, config), std::move(class_names)};
    return kb;
}

} // namespace tcms
