#pragma once

namespace wildram {

// Session-wide default truncation window: number of coefficients kept past
// the leading exponent whenever an operation cannot preserve exactness
// (division by a non-monomial, geometric Frobenius sums, expansions in a
// computed uniformizer). Thread-local so concurrent sessions do not
// interfere.
long default_window();
void set_default_window(long w);

// RAII override, used by the C API to apply a per-tower window and by tests
// to retry with a wider one.
class WindowGuard {
public:
  explicit WindowGuard(long w) : saved_(default_window()) { set_default_window(w); }
  ~WindowGuard() { set_default_window(saved_); }
  WindowGuard(const WindowGuard&) = delete;
  WindowGuard& operator=(const WindowGuard&) = delete;

private:
  long saved_;
};

}  // namespace wildram
