#pragma once

#include <iosfwd>

namespace hoeffding {

// Which side of zero carries more mass range: Right means b >= -a,
// Left means b < -a.  Ties count as Right.
enum class SkewClass { Right, Left };

// Upper = bound on P(sum >= t) (Chernoff parameter s > 0);
// Lower = bound on P(sum <= -t), obtained by reflecting the support.
enum class TailDirection { Upper, Lower };

// Support [a, b] of a bounded zero-mean random variable, with a < 0 < b.
// Construction validates; derived quantities are cheap and computed on demand.
class Interval {
  public:
    // Throws std::invalid_argument naming the violated condition.
    Interval(double a, double b);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double width() const noexcept { return b_ - a_; }

    // A = (|a| + b) / 2 = (b - a) / 2
    double arithmetic_mean() const noexcept { return 0.5 * (b_ - a_); }

    // G = sqrt(|a| b); never exceeds arithmetic_mean()
    double geometric_mean() const noexcept;

    // -a / (b - a), in (0, 1); at most 0.5 exactly when right-skewed
    double lambda() const noexcept { return -a_ / (b_ - a_); }

    SkewClass skew_class() const noexcept {
        return b_ >= -a_ ? SkewClass::Right : SkewClass::Left;
    }

    // [-b, -a]; an involution that flips the skew class unless symmetric
    Interval reflected() const { return Interval(-b_, -a_); }

    // The sigma with E[exp(sX)] <= exp(s^2 sigma^2 / 2) for the requested
    // tail: A for right-skewed supports, G for left-skewed ones; the lower
    // tail uses the reflected support.
    double subgaussian_scale(TailDirection dir) const;

    friend bool operator==(const Interval&, const Interval&) = default;

  private:
    double a_;
    double b_;
};

std::ostream& operator<<(std::ostream& os, const Interval& iv);

}  // namespace hoeffding
