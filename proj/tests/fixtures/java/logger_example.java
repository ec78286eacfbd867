class Example {
  void run() {
    String s = "Example";
    Logger.getLogger(s);
  }
}
