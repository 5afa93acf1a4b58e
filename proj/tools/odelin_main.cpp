#include <cstdio>

int main() {
  std::puts("odelin: placeholder");
  return 2;
}
