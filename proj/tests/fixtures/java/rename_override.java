package p;

class C extends A {
  A a;
  void m() {
    a.m();
  }
  int n() {
    int n = 1;
    return 1;
  }
}
