package tiny;

import java.io.Serializable;
import java.util.List;
import java.util.ArrayList;

// Base class for all animals.
public class Animal implements Serializable {
    private static final long serialVersionUID = 1L;

    protected String name;
    private int age;

    public Animal(String name, int age) {
        this.name = name;
        this.age = age;
    }

    public String getName() {
        return name;
    }

    public int getAge() {
        return age;
    }

    /* Feed the animal.
       Increases age by one. */
    public void feed() {
        age = age + 1;
    }

    public void feed(int amount) {
        age = age + amount;
    }

    public List<String> tags() {
        ArrayList<String> tags = new ArrayList<String>();
        tags.add(name);
        return tags;
    }
}
