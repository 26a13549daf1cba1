#include <cstdio>
int main() { std::puts("netinterp (stub)"); return 0; }
