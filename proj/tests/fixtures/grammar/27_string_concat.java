class Concat {
    String greet(String name) {
        String msg = "hello " + name;
        return msg + "!";
    }
}
