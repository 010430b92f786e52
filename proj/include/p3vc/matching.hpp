#pragma once

#include <limits>
#include <queue>
#include <vector>

namespace p3vc {

/// Maximum matching in a bipartite graph (Hopcroft-Karp, O(sqrt(V) E)).
class bipartite_matching {
public:
    bipartite_matching(int left, int right)
        : adj_(static_cast<std::size_t>(left)), match_left_(left, -1), match_right_(right, -1),
          dist_(left, 0)
    {
    }

    void add_edge(int l, int r) { adj_[l].push_back(r); }

    int left_size() const { return static_cast<int>(adj_.size()); }
    int right_size() const { return static_cast<int>(match_right_.size()); }
    const std::vector<int>& left_neighbors(int l) const { return adj_[l]; }

    int solve()
    {
        int size = 0;
        while (layer()) {
            for (int l = 0; l < left_size(); ++l)
                if (match_left_[l] < 0 && augment(l))
                    ++size;
        }
        return size;
    }

    int match_of_left(int l) const { return match_left_[l]; }
    int match_of_right(int r) const { return match_right_[r]; }

    // left nodes reachable from unmatched left nodes by alternating paths,
    // and the right nodes seen on the way
    std::pair<std::vector<char>, std::vector<char>> alternating_reach() const
    {
        std::vector<char> left_seen(adj_.size(), 0), right_seen(match_right_.size(), 0);
        std::vector<int> stack;
        for (int l = 0; l < left_size(); ++l)
            if (match_left_[l] < 0) {
                left_seen[l] = 1;
                stack.push_back(l);
            }
        while (!stack.empty()) {
            int l = stack.back();
            stack.pop_back();
            for (int r : adj_[l]) {
                if (right_seen[r])
                    continue;
                right_seen[r] = 1;
                int next = match_right_[r];
                if (next >= 0 && !left_seen[next]) {
                    left_seen[next] = 1;
                    stack.push_back(next);
                }
            }
        }
        return {left_seen, right_seen};
    }

private:
    static constexpr int inf = std::numeric_limits<int>::max();

    bool layer()
    {
        std::queue<int> q;
        bool found = false;
        for (int l = 0; l < left_size(); ++l) {
            if (match_left_[l] < 0) {
                dist_[l] = 0;
                q.push(l);
            } else {
                dist_[l] = inf;
            }
        }
        while (!q.empty()) {
            int l = q.front();
            q.pop();
            for (int r : adj_[l]) {
                int next = match_right_[r];
                if (next < 0)
                    found = true;
                else if (dist_[next] == inf) {
                    dist_[next] = dist_[l] + 1;
                    q.push(next);
                }
            }
        }
        return found;
    }

    bool augment(int l)
    {
        for (int r : adj_[l]) {
            int next = match_right_[r];
            if (next < 0 || (dist_[next] == dist_[l] + 1 && augment(next))) {
                match_left_[l] = r;
                match_right_[r] = l;
                return true;
            }
        }
        dist_[l] = inf;
        return false;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<int> match_left_, match_right_, dist_;
};

}  // namespace p3vc
