#include <cstdio>

int main() {
  std::puts("lisa: placeholder");
  return 0;
}
