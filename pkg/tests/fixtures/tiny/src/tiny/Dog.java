package tiny;

// A dog.
public class Dog extends Animal {
    private boolean trained;

    public Dog(String name, int age) {
        super(name, age);
        this.trained = false;
    }

    @Override
    public String getName() {
        return "Dog " + name;
    }

    @Override
    public String toString() {
        return "Dog(" + name + ")";
    }

    public void train() throws TrainingException {
        if (trained) {
            throw new TrainingException("already trained");
        }
        trained = true;
    }

    public boolean isTrained() {
        return trained;
    }
}
